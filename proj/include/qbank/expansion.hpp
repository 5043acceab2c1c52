#pragma once

/// Accepted-answer enumeration for squared binomials. A student asked to
/// expand (b + a)^2 may type the monomials in any order and write the cross
/// term with either symbol first, so the key lists every such string.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbank {

/// All distinct renderings of (a+b)^2: three monomials in each of the 3!
/// orders, with the cross term as "2ab" or "2ba". 12 strings total.
inline std::vector<std::string> enumerate_expansion_forms(const std::string& a,
                                                          const std::string& b) {
    if (a == b) throw std::invalid_argument("enumerate_expansion_forms: symbols must be distinct");
    const std::string square_a = a + "^2";
    const std::string square_b = b + "^2";
    std::vector<std::string> forms;
    for (const std::string& cross : {"2" + a + b, "2" + b + a}) {
        const std::array<const std::string*, 3> terms = {&square_a, &cross, &square_b};
        // Index permutations of the three term slots.
        static constexpr int kOrders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& order : kOrders) {
            std::string s = *terms[order[0]];
            s += " + " + *terms[order[1]];
            s += " + " + *terms[order[2]];
            forms.push_back(s);
        }
    }
    // The construction cannot repeat itself for distinct symbols, but dedupe
    // anyway so the contract holds even if the rendering rules change.
    std::vector<std::string> unique;
    for (auto& s : forms) {
        bool seen = false;
        for (const auto& u : unique)
            if (u == s) { seen = true; break; }
        if (!seen) unique.push_back(std::move(s));
    }
    return unique;
}

/// The classic sign error taught against in class: (a+b)^2 = a^2 + b^2.
inline std::string buggy_expansion_form(const std::string& a, const std::string& b) {
    return a + "^2 + " + b + "^2";
}

} // namespace qbank
