#pragma once

#include <string>
#include <string_view>

#include "valsyz/poly.hpp"

namespace valsyz {

/// True when `s` must be parenthesised to be read back as one factor.
inline bool needs_parens(std::string_view s) {
    if (s.empty()) return false;
    if (s.front() == '(' && s.back() == ')') {
        int depth = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return true;
        }
        return false;
    }
    for (char c : s)
        if (c < '0' || c > '9') return true;
    return false;
}

/// Renders `p` in the variable `var`, highest degree first, e.g.
/// `(2/3)*X^2 - X + 1`. `coeff` maps a coefficient to text; a leading '-'
/// on a single-term coefficient is folded into the sign of the term.
template <Scalar E, class CoeffRender>
std::string render_poly(const Poly<E>& p, std::string_view var, CoeffRender&& coeff) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const E& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (detail::scalar_is_zero(c)) continue;
        std::string s = coeff(c);
        bool neg = !s.empty() && s.front() == '-' && s.find_first_of("+-", 1) == std::string::npos;
        std::string body = neg ? s.substr(1) : s;
        if (needs_parens(body)) body = "(" + body + ")";
        std::string mono;
        if (i == 1) mono = std::string(var);
        if (i > 1) mono = std::string(var) + "^" + std::to_string(i);
        std::string term;
        if (mono.empty()) term = body;
        else if (body == "1") term = mono;
        else term = body + "*" + mono;
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace valsyz
