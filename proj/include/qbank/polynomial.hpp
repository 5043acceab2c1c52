#pragma once

/// Integer polynomials in one variable, stored as ascending coefficients
/// (index = power). Enough for building quadratics from chosen roots and
/// printing stems like "2x^2 - 6x - 8 = 0".

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbank/checked_int.hpp"
#include "qbank/rational.hpp"

namespace qbank {

struct IntPolynomial {
    std::vector<std::int64_t> coefficients; // coefficients[k] multiplies x^k

    int degree() const {
        for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
            if (coefficients[static_cast<std::size_t>(k)] != 0) return k;
        return 0;
    }

    std::int64_t eval(std::int64_t x) const {
        std::int64_t acc = 0;
        for (std::size_t k = coefficients.size(); k-- > 0;)
            acc = checked_add(checked_mul(acc, x), coefficients[k]);
        return acc;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = coefficients.size(); k-- > 0;)
            acc = acc * x + Rational(coefficients[k]);
        return acc;
    }

    bool operator==(const IntPolynomial&) const = default;
};

/// lead * (x - r1)(x - r2) expanded. Rational roots are allowed as long as the
/// expanded coefficients come out integral; otherwise this throws rather than
/// silently rounding an answer key.
inline IntPolynomial quadratic_from_roots(const Rational& r1, const Rational& r2,
                                          std::int64_t lead) {
    if (lead == 0) throw std::invalid_argument("quadratic_from_roots: zero leading coefficient");
    const Rational a(lead);
    const Rational b = -a * (r1 + r2);
    const Rational c = a * r1 * r2;
    if (!b.is_integer() || !c.is_integer())
        throw std::invalid_argument("quadratic_from_roots: roots do not give integer coefficients");
    return IntPolynomial{{c.num(), b.num(), lead}};
}

namespace detail {

inline void append_term(std::string& out, std::int64_t coefficient, int power,
                        const std::string& variable) {
    if (coefficient == 0) return;
    const std::int64_t mag = coefficient < 0 ? checked_negate(coefficient) : coefficient;
    if (out.empty())
        out += coefficient < 0 ? "-" : "";
    else
        out += coefficient < 0 ? " - " : " + ";
    if (mag != 1 || power == 0) out += std::to_string(mag);
    if (power >= 1) out += variable;
    if (power >= 2) out += "^" + std::to_string(power);
}

} // namespace detail

/// Descending-power rendering: {-8, -6, 2} with variable "x" gives
/// "2x^2 - 6x - 8". The zero polynomial renders as "0".
inline std::string polynomial_to_string(const IntPolynomial& p, const std::string& variable) {
    std::string out;
    for (int k = static_cast<int>(p.coefficients.size()) - 1; k >= 0; --k)
        detail::append_term(out, p.coefficients[static_cast<std::size_t>(k)], k, variable);
    if (out.empty()) out = "0";
    return out;
}

} // namespace qbank
