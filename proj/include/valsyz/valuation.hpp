#pragma once

// Residually discrete valuation domains. The algorithms only ask two
// questions of a domain: "does this element of the fraction field lie in V?"
// (`contains`) and "is it a unit of V?" (`is_unit`). Divisibility, content
// and every pivot decision are derived from those.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "valsyz/poly.hpp"
#include "valsyz/ratfunc.hpp"
#include "valsyz/render.hpp"
#include "valsyz/scalar.hpp"

namespace valsyz {

// Elements of a domain and of its fraction field share one type; membership
// in V is a predicate, not a type distinction.
template <class D>
concept ValuationDomain = requires(const D& dom, const typename D::element_type& x, const Integer& z) {
    requires Scalar<typename D::element_type>;
    { dom.contains(x) } -> std::same_as<bool>;
    { dom.is_unit(x) } -> std::same_as<bool>;
    { dom.from_integer(z) } -> std::convertible_to<typename D::element_type>;
    { dom.render(x) } -> std::convertible_to<std::string>;
    { dom.name() } -> std::convertible_to<std::string>;
};

template <class D>
using element_t = typename D::element_type;

// ---------------------------------------------------------------------------
// Base fields for the rational-function and trivial instances.

struct RationalField {
    using element_type = Rational;
    Rational from_integer(const Integer& z) const { return Rational(z); }
    std::string render(const Rational& x) const { return x.get_str(); }
    std::string name() const { return "q"; }
};

class PrimeField {
public:
    using element_type = Fp;
    explicit PrimeField(const Integer& p);
    std::uint64_t prime() const { return p_; }
    Fp from_integer(const Integer& z) const;
    std::string render(const Fp& x) const { return std::to_string(x.value()); }
    std::string name() const { return std::to_string(p_); }

private:
    std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Concrete domains.

/// Z localised at p: rationals a/b with p not dividing b.
class ZpDomain {
public:
    using element_type = Rational;

    explicit ZpDomain(const Integer& p);

    const Integer& prime() const { return p_; }
    /// p-adic valuation; nullopt for 0.
    std::optional<long> valuation(const Rational& x) const;
    bool contains(const Rational& x) const;
    bool is_unit(const Rational& x) const;
    Rational from_integer(const Integer& z) const { return Rational(z); }
    std::string render(const Rational& x) const { return x.get_str(); }
    std::string name() const { return "zp:" + p_.get_str(); }

private:
    Integer p_;
};

/// A field with the trivial valuation: V = K, every nonzero element a unit.
template <class Field>
class TrivialFieldDomain {
public:
    using element_type = typename Field::element_type;

    explicit TrivialFieldDomain(Field field) : field_(std::move(field)) {}

    std::optional<long> valuation(const element_type& x) const {
        if (is_zero(x)) return std::nullopt;
        return 0;
    }
    bool contains(const element_type&) const { return true; }
    bool is_unit(const element_type& x) const { return !is_zero(x); }
    element_type from_integer(const Integer& z) const { return field_.from_integer(z); }
    std::string render(const element_type& x) const { return field_.render(x); }
    std::string name() const { return "field:" + field_.name(); }
    const Field& base() const { return field_; }

private:
    Field field_;
};

/// k0(t) localised at t = 0: fractions a(t)/b(t) with b(0) != 0, valued by
/// the order of vanishing at 0.
template <class Field>
class RationalFunctionDomain {
public:
    using base_element = typename Field::element_type;
    using element_type = RatFunc<base_element>;

    explicit RationalFunctionDomain(Field field) : field_(std::move(field)) {}

    std::optional<long> valuation(const element_type& x) const {
        if (is_zero(x)) return std::nullopt;
        return x.order_at_zero();
    }
    bool contains(const element_type& x) const {
        return is_zero(x) || !is_zero(x.den().coeff(0));
    }
    bool is_unit(const element_type& x) const {
        return !is_zero(x) && !is_zero(x.num().coeff(0)) && !is_zero(x.den().coeff(0));
    }
    element_type from_integer(const Integer& z) const {
        return element_type(Poly<base_element>(field_.from_integer(z)));
    }
    /// The transcendental t, used by the text parser.
    element_type variable() const {
        return element_type(Poly<base_element>::monomial(field_.from_integer(1), 1));
    }
    std::string render(const element_type& x) const {
        auto coeff = [this](const base_element& c) { return field_.render(c); };
        std::string num = render_poly(x.num(), "t", coeff);
        if (x.den().degree() == 0) return num;
        return "(" + num + ")/(" + render_poly(x.den(), "t", coeff) + ")";
    }
    std::string name() const { return "rft0:" + field_.name(); }
    const Field& base() const { return field_; }

private:
    Field field_;
};

static_assert(ValuationDomain<ZpDomain>);
static_assert(ValuationDomain<TrivialFieldDomain<RationalField>>);
static_assert(ValuationDomain<TrivialFieldDomain<PrimeField>>);
static_assert(ValuationDomain<RationalFunctionDomain<RationalField>>);
static_assert(ValuationDomain<RationalFunctionDomain<PrimeField>>);

// ---------------------------------------------------------------------------
// Runtime selection of an instance.

struct DomainSpec {
    enum class Kind { Zp, RationalFunctionAtZero, TrivialField };
    Kind kind = Kind::Zp;
    /// The prime for Zp, or the characteristic of the base field (0 for Q).
    Integer p = 0;

    /// Parses `zp:<p>`, `rft0:<q|p>` or `field:<q|p>`. Throws ParseError or NotPrime.
    static DomainSpec parse(std::string_view text);
    std::string str() const;
};

using AnyDomain = std::variant<ZpDomain, TrivialFieldDomain<RationalField>, TrivialFieldDomain<PrimeField>,
                               RationalFunctionDomain<RationalField>, RationalFunctionDomain<PrimeField>>;

AnyDomain make_domain(const DomainSpec& spec);

// ---------------------------------------------------------------------------
// Operations derived from the domain interface.

enum class Divisibility { ADividesB, BDividesA, Both };

/// ADividesB: b = x*a.  BDividesA: a = x*b.  Both: b = x*a and a = x_rev*b.
template <class E>
struct DivisibilityVerdict {
    Divisibility kind;
    E x;
    E x_rev;
};

/// Does a divide b in V? Every element divides 0; 0 divides only 0.
template <ValuationDomain D>
bool divides(const D& dom, const element_t<D>& a, const element_t<D>& b) {
    if (is_zero(b)) return true;
    if (is_zero(a)) return false;
    element_t<D> q = b * inverse(a);
    return dom.contains(q);
}

template <ValuationDomain D>
DivisibilityVerdict<element_t<D>> decide_divisibility(const D& dom, const element_t<D>& a,
                                                      const element_t<D>& b) {
    using E = element_t<D>;
    if (is_zero(a) && is_zero(b)) return {Divisibility::Both, E(1), E(1)};
    if (is_zero(a)) return {Divisibility::BDividesA, E(0), E(0)};
    if (is_zero(b)) return {Divisibility::ADividesB, E(0), E(0)};
    E q = b * inverse(a);
    if (!dom.contains(q)) return {Divisibility::BDividesA, inverse(q), E(0)};
    if (dom.is_unit(q)) return {Divisibility::Both, q, inverse(q)};
    return {Divisibility::ADividesB, q, E(0)};
}

/// Exact quotient a/b in V; NotDivisible when it leaves V or b = 0.
template <ValuationDomain D>
element_t<D> div_exact(const D& dom, const element_t<D>& a, const element_t<D>& b) {
    if (is_zero(b)) throw Error(Errc::NotDivisible, "division by zero");
    element_t<D> q = a * inverse(b);
    if (!dom.contains(q)) throw Error(Errc::NotDivisible, dom.render(a) + " / " + dom.render(b) + " is not in V");
    return q;
}

/// Checks that a fraction-field value lies in V.
template <ValuationDomain D>
element_t<D> make(const D& dom, element_t<D> raw) {
    if (!dom.contains(raw)) throw Error(Errc::NotInDomain, dom.render(raw) + " has negative valuation in " + dom.name());
    return raw;
}

template <ValuationDomain D>
element_t<D> make(const D& dom, const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::NotInDomain, "zero denominator");
    return make(dom, element_t<D>(dom.from_integer(num) * inverse(dom.from_integer(den))));
}

template <class E>
struct Content {
    E u;
    std::size_t position;
};

/// First coefficient of minimal valuation: it divides all the others.
/// Works on fraction-field values as well (the quotients then lie in V).
template <ValuationDomain D>
Content<element_t<D>> content(const D& dom, std::span<const element_t<D>> coeffs) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i])) continue;
        if (!best || !divides(dom, coeffs[*best], coeffs[i])) best = i;
    }
    if (!best) throw Error(Errc::AllZero, "content of an all-zero list");
    return {coeffs[*best], *best};
}

}  // namespace valsyz
