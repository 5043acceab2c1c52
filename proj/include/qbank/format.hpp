#pragma once

/// Display rounding and number-to-text helpers. Everything routes through
/// integer hundredths so emitted files are byte-identical across platforms;
/// printf-style double formatting never touches an answer key.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace qbank {

/// Round to hundredths, halves away from zero (0.125 -> 13, -0.125 -> -13).
inline std::int64_t round_to_hundredths(double x) {
    return std::llround(x * 100.0);
}

/// Fixed two-decimal rendering of an integer count of hundredths:
/// -78 -> "-0.78", 125 -> "1.25", 0 -> "0.00".
inline std::string format_hundredths(std::int64_t hundredths) {
    const bool negative = hundredths < 0;
    const std::uint64_t mag = negative
        ? ~static_cast<std::uint64_t>(hundredths) + 1
        : static_cast<std::uint64_t>(hundredths);
    std::string out = negative ? "-" : "";
    out += std::to_string(mag / 100);
    out += '.';
    const std::uint64_t frac = mag % 100;
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

/// Two-decimal display of a double, rounded half away from zero.
inline std::string format_fixed2(double x) {
    return format_hundredths(round_to_hundredths(x));
}

/// Shortest exact rendering of integer hundredths: 6050 -> "60.5",
/// 6000 -> "60", 6025 -> "60.25". Used for stem values and figure coordinates.
inline std::string format_trimmed_hundredths(std::int64_t hundredths) {
    std::string s = format_hundredths(hundredths);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

/// Accepted typed forms for a two-decimal answer: the fixed form, its
/// progressively trailing-zero-stripped variants (dropping the point once the
/// fraction is gone), and the leading-zero-dropped fixed form when |v| < 1.
/// 0 -> {"0.00", "0.0", "0", ".00"}; 125 -> {"1.25"}.
inline std::vector<std::string> rounded_answer_forms(std::int64_t hundredths) {
    std::vector<std::string> forms;
    const std::string fixed = format_hundredths(hundredths);
    forms.push_back(fixed);
    std::string s = fixed;
    while (s.find('.') != std::string::npos && s.back() == '0') {
        s.pop_back();
        if (s.back() == '.') s.pop_back();
        forms.push_back(s);
    }
    if (hundredths > -100 && hundredths < 100) {
        const std::size_t zero_at = fixed[0] == '-' ? 1 : 0;
        std::string dropped = fixed;
        dropped.erase(zero_at, 1);
        forms.push_back(dropped);
    }
    std::vector<std::string> unique;
    for (auto& f : forms) {
        bool seen = false;
        for (const auto& u : unique)
            if (u == f) { seen = true; break; }
        if (!seen) unique.push_back(std::move(f));
    }
    return unique;
}

} // namespace qbank
