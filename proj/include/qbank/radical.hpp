#pragma once

/// Exact sums of the form q0 + c1*sqrt(n1) + c2*sqrt(n2) + ... with squarefree
/// radicands. Values like a trapezoid perimeter 13 + sqrt(13) stay symbolic so
/// option sets can be compared and typeset exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbank/checked_int.hpp"
#include "qbank/rational.hpp"

namespace qbank {

/// Pulls all square factors out of n: returns (c, r) with c*c*r = n and r
/// squarefree. radical_simplify(8) = (2, 2); perfect squares collapse to r = 1.
inline std::pair<std::int64_t, std::int64_t> radical_simplify(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("radical_simplify: radicand must be positive");
    std::int64_t coefficient = 1;
    std::int64_t rest = n;
    for (std::int64_t f = 2; f * f <= rest; ++f) {
        while (rest % (f * f) == 0) {
            coefficient = checked_mul(coefficient, f);
            rest /= f * f;
        }
    }
    return {coefficient, rest};
}

struct RadicalTerm {
    Rational coefficient;
    std::int64_t radicand = 2;

    bool operator==(const RadicalTerm&) const = default;
};

class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(Rational rational_part) : rational_part_(rational_part) {} // NOLINT
    RadicalSum(Rational rational_part, std::vector<RadicalTerm> raw_terms)
        : rational_part_(rational_part) {
        for (const auto& t : raw_terms) add_term(t.coefficient, t.radicand);
        normalize();
    }

    const Rational& rational_part() const { return rational_part_; }
    const std::vector<RadicalTerm>& terms() const { return terms_; }
    bool is_rational() const { return terms_.empty(); }

    double value() const {
        double v = rational_part_.value();
        for (const auto& t : terms_)
            v += t.coefficient.value() * std::sqrt(static_cast<double>(t.radicand));
        return v;
    }

    RadicalSum operator+(const RadicalSum& rhs) const {
        RadicalSum out = *this;
        out.rational_part_ += rhs.rational_part_;
        for (const auto& t : rhs.terms_) out.add_term(t.coefficient, t.radicand);
        out.normalize();
        return out;
    }
    RadicalSum operator-(const RadicalSum& rhs) const {
        RadicalSum out = *this;
        out.rational_part_ -= rhs.rational_part_;
        for (const auto& t : rhs.terms_) out.add_term(-t.coefficient, t.radicand);
        out.normalize();
        return out;
    }

    bool operator==(const RadicalSum&) const = default;

private:
    // Accepts any positive radicand; square factors migrate into the
    // coefficient so distinct terms always carry distinct squarefree radicands.
    void add_term(const Rational& coefficient, std::int64_t radicand) {
        const auto [c, r] = radical_simplify(radicand);
        const Rational scaled = coefficient * Rational(c);
        if (r == 1) {
            rational_part_ += scaled;
            return;
        }
        for (auto& t : terms_) {
            if (t.radicand == r) {
                t.coefficient += scaled;
                return;
            }
        }
        terms_.push_back({scaled, r});
    }

    void normalize() {
        std::erase_if(terms_, [](const RadicalTerm& t) { return t.coefficient.is_zero(); });
        std::sort(terms_.begin(), terms_.end(),
                  [](const RadicalTerm& a, const RadicalTerm& b) { return a.radicand < b.radicand; });
    }

    Rational rational_part_;
    std::vector<RadicalTerm> terms_;
};

/// sqrt(n) as a simplified RadicalSum (rational when n is a perfect square).
inline RadicalSum radical_sqrt(std::int64_t n) {
    return RadicalSum(Rational(0), {{Rational(1), n}});
}

inline double radical_sum_value(const RadicalSum& s) { return s.value(); }

/// Plain-text rendering: "13 + sqrt(13)", "2sqrt(2)", "15".
inline std::string radical_to_string(const RadicalSum& s) {
    std::string out;
    if (!s.rational_part().is_zero() || s.terms().empty())
        out = rational_to_string(s.rational_part());
    for (const auto& t : s.terms()) {
        const Rational mag = t.coefficient.is_negative() ? -t.coefficient : t.coefficient;
        if (out.empty())
            out += t.coefficient.is_negative() ? "-" : "";
        else
            out += t.coefficient.is_negative() ? " - " : " + ";
        if (!(mag == Rational(1))) out += rational_to_string(mag);
        out += "sqrt(" + std::to_string(t.radicand) + ")";
    }
    return out;
}

} // namespace qbank
