#pragma once

/// Exact rational arithmetic for answer construction.
///
/// Every Rational is kept in canonical form: the denominator is positive and
/// gcd(|numerator|, denominator) = 1, with zero stored as 0/1. Arithmetic is
/// overflow-checked; generators bound their magnitudes so 64 bits always
/// suffice, and anything else is a bug we want loud.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbank/checked_int.hpp"

namespace qbank {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(checked_negate(num_), den_); }

    Rational operator+(const Rational& rhs) const {
        return Rational(checked_add(checked_mul(num_, rhs.den_), checked_mul(rhs.num_, den_)),
                        checked_mul(den_, rhs.den_));
    }
    Rational operator-(const Rational& rhs) const { return *this + (-rhs); }
    Rational operator*(const Rational& rhs) const {
        return Rational(checked_mul(num_, rhs.num_), checked_mul(den_, rhs.den_));
    }
    Rational operator/(const Rational& rhs) const {
        if (rhs.num_ == 0) throw std::domain_error("division by zero rational");
        return Rational(checked_mul(num_, rhs.den_), checked_mul(den_, rhs.num_));
    }

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    bool operator==(const Rational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    std::strong_ordering operator<=>(const Rational& rhs) const {
        return checked_mul(num_, rhs.den_) <=> checked_mul(rhs.num_, den_);
    }

private:
    void reduce() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = checked_negate(num_);
            den_ = checked_negate(den_);
        }
        const std::int64_t g = std::gcd(checked_abs(num_), den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_;
    std::int64_t den_;
};

/// The unique reduced rational equal to num/den, positive denominator.
inline Rational rational_reduce(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational_reduce: zero denominator");
    return Rational(num, den);
}

/// "9/8", "-5/4"; integers render without the denominator.
inline std::string rational_to_string(const Rational& r) {
    std::string out = std::to_string(r.num());
    if (r.den() != 1) out += "/" + std::to_string(r.den());
    return out;
}

/// Unreduced spellings of a reduced rational: one "p*k/q*k" string per
/// multiplier, duplicates dropped, reduced form first. The multiplier list is
/// caller-supplied and must start with 1.
inline std::vector<std::string> rational_equivalents(const Rational& r,
                                                     const std::vector<std::int64_t>& multipliers) {
    if (multipliers.empty() || multipliers.front() != 1)
        throw std::invalid_argument("rational_equivalents: multipliers must be nonempty and start at 1");
    std::vector<std::string> out;
    for (const std::int64_t k : multipliers) {
        if (k <= 0) throw std::invalid_argument("rational_equivalents: multipliers must be positive");
        const std::int64_t num = checked_mul(r.num(), k);
        const std::int64_t den = checked_mul(r.den(), k);
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        bool seen = false;
        for (const auto& prev : out) seen = seen || prev == s;
        if (!seen) out.push_back(std::move(s));
    }
    return out;
}

/// The four spellings of an integer answer granted full credit:
/// "k", "k.", "k.0", "k.00".
inline std::vector<std::string> decimal_forms(std::int64_t value) {
    const std::string base = std::to_string(value);
    return {base, base + ".", base + ".0", base + ".00"};
}

} // namespace qbank
