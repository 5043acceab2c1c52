#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qbank {

// Answer keys are built from these helpers; a silent wraparound would
// corrupt them, so any overflow throws instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow: add");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow: subtract");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow: multiply");
    return out;
}

inline std::int64_t checked_negate(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_negate(a) : a; }

/// Largest k with k*k <= n.
inline std::int64_t integer_sqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("integer_sqrt of negative value");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    const std::int64_t r = integer_sqrt(n);
    return r * r == n;
}

} // namespace qbank
