#pragma once

// Text syntax for elements and vectors.
//
//   element   6   2/3   -5   (t+2)/(3)        (t only in rft0 domains)
//   vector    (2/3)*X^2 + 1, -X                components split by commas,
//             (2/3)*X^2 + 1, -X wrapped in one pair of parentheses is the
//             same vector.
//
// Expressions use + - * / ^ and parentheses; division is only by nonzero
// constants. Rendering produces the same syntax and parses back to the same
// value.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "valsyz/polyvec.hpp"
#include "valsyz/render.hpp"

namespace valsyz {

namespace text_detail {

template <ValuationDomain D>
class ExprParser {
public:
    using E = element_t<D>;

    ExprParser(const D& dom, std::string_view src, std::size_t column_offset)
        : dom_(dom), src_(src), base_(column_offset) {}

    Poly<E> parse_all() {
        Poly<E> v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::ParseError, "column " + std::to_string(base_ + pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly<E> expr() {
        Poly<E> acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly<E> term() {
        Poly<E> acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Poly<E> d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                if (d.degree() > 0) {
                    pos_ = at;
                    fail("division by a non-constant");
                }
                acc *= inverse(d.lead());
            } else {
                return acc;
            }
        }
    }

    Poly<E> unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly<E> power() {
        Poly<E> base = atom();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        if (pos_ - start > 6) fail("exponent too large");
        int e = std::stoi(std::string(src_.substr(start, pos_ - start)));
        Poly<E> acc(E(1));
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    Poly<E> atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return Poly<E>(E(dom_.from_integer(Integer(std::string(src_.substr(start, pos_ - start))))));
        }
        if (c == 'X' || c == 'x') {
            ++pos_;
            return Poly<E>::monomial(E(1), 1);
        }
        if (c == 't') {
            if constexpr (requires { dom_.variable(); }) {
                ++pos_;
                return Poly<E>(dom_.variable());
            } else {
                fail("'t' is only available in rft0 domains");
            }
        }
        if (c == '(') {
            ++pos_;
            Poly<E> inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const D& dom_;
    std::string_view src_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

/// Splits at depth-0 commas; returns (offset, piece) pairs.
inline std::vector<std::pair<std::size_t, std::string_view>> split_components(std::string_view s,
                                                                               std::size_t offset) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.emplace_back(offset + start, s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.emplace_back(offset + start, s.substr(start));
    return out;
}

}  // namespace text_detail

/// Parses a vector of V[X]^n; every coefficient must lie in V.
template <ValuationDomain D>
PolyVec<element_t<D>> parse_polyvec(const D& dom, std::string_view text) {
    using E = element_t<D>;
    std::size_t offset = 0;
    auto trim = [&](std::string_view& s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
            ++offset;
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    };
    trim(text);
    if (text.empty()) throw Error(Errc::ParseError, "column 1: empty vector");

    auto parts = text_detail::split_components(text, offset);
    if (parts.size() == 1 && text.front() == '(' && text.back() == ')') {
        // "(a, b)" form: strip the outer pair when it encloses a comma.
        auto inner = text_detail::split_components(text.substr(1, text.size() - 2), offset + 1);
        if (inner.size() > 1) parts = std::move(inner);
    }

    PolyVec<E> v(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) {
        auto [col, piece] = parts[j];
        v[j] = text_detail::ExprParser<D>(dom, piece, col).parse_all();
        for (const auto& c : v[j].coeffs())
            if (!dom.contains(c))
                throw Error(Errc::NotInDomain, "column " + std::to_string(col + 1) + ": coefficient " + dom.render(c) +
                                                   " is not in " + dom.name());
    }
    return v;
}

/// Parses one element of V (no X allowed).
template <ValuationDomain D>
element_t<D> parse_element(const D& dom, std::string_view text) {
    using E = element_t<D>;
    Poly<E> p = text_detail::ExprParser<D>(dom, text, 0).parse_all();
    if (p.degree() > 0) throw Error(Errc::ParseError, "expected a constant, got a polynomial in X");
    return make(dom, p.is_zero() ? E(0) : p.lead());
}

template <ValuationDomain D>
std::string render_poly_x(const D& dom, const Poly<element_t<D>>& p) {
    return render_poly(p, "X", [&dom](const element_t<D>& c) { return dom.render(c); });
}

/// One component: the polynomial itself. Several: "(p1, p2, ...)".
template <ValuationDomain D>
std::string render_polyvec(const D& dom, const PolyVec<element_t<D>>& v) {
    if (v.size() == 1) return render_poly_x(dom, v[0]);
    std::string out = "(";
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out += ", ";
        out += render_poly_x(dom, v[j]);
    }
    return out + ")";
}

}  // namespace valsyz
