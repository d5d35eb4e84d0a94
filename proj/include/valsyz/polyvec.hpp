#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "valsyz/poly.hpp"
#include "valsyz/valuation.hpp"

namespace valsyz {

/// Position (j, r) of the V-basis vector X^r f_j of V[X]^n. Components are
/// 1-based; the order compares the component first, then the exponent.
struct PivotIndex {
    int index = 1;
    int exponent = 0;

    friend auto operator<=>(const PivotIndex&, const PivotIndex&) = default;
};

inline std::string to_string(const PivotIndex& p) {
    return "(" + std::to_string(p.index) + "," + std::to_string(p.exponent) + ")";
}

/// Vector of V[X]^n (or K[X]^n), stored as n dense polynomials.
template <Scalar E>
class PolyVec {
public:
    PolyVec() = default;
    explicit PolyVec(std::size_t n) : comps_(n) {}
    explicit PolyVec(std::vector<Poly<E>> comps) : comps_(std::move(comps)) {}

    /// c * X^r f_j.
    static PolyVec basis(std::size_t n, PivotIndex at, E c = E(1)) {
        PolyVec v(n);
        v.comps_.at(static_cast<std::size_t>(at.index - 1)) =
            Poly<E>::monomial(std::move(c), static_cast<std::size_t>(at.exponent));
        return v;
    }

    std::size_t size() const { return comps_.size(); }
    const Poly<E>& operator[](std::size_t j) const { return comps_[j]; }
    Poly<E>& operator[](std::size_t j) { return comps_[j]; }
    const std::vector<Poly<E>>& components() const { return comps_; }

    bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const Poly<E>& p) { return p.is_zero(); });
    }

    /// Highest exact degree over the components; -1 for the zero vector.
    int degree() const {
        int d = -1;
        for (const auto& p : comps_) d = std::max(d, p.degree());
        return d;
    }

    E coord(PivotIndex at) const {
        if (at.index < 1 || static_cast<std::size_t>(at.index) > comps_.size() || at.exponent < 0)
            throw Error(Errc::IndexOutOfRange, "coordinate " + to_string(at) + " outside V[X]^" +
                                                   std::to_string(comps_.size()));
        return comps_[static_cast<std::size_t>(at.index - 1)].coeff(static_cast<std::size_t>(at.exponent));
    }

    /// Calls f(PivotIndex, const E&) on every nonzero coordinate in increasing order.
    template <class F>
    void for_each_coord(F&& f) const {
        for (std::size_t j = 0; j < comps_.size(); ++j) {
            const auto& c = comps_[j].coeffs();
            for (std::size_t r = 0; r < c.size(); ++r)
                if (!detail::scalar_is_zero(c[r])) f(PivotIndex{static_cast<int>(j + 1), static_cast<int>(r)}, c[r]);
        }
    }

    PolyVec& operator+=(const PolyVec& o) {
        check_size(o);
        for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] += o.comps_[j];
        return *this;
    }
    PolyVec& operator-=(const PolyVec& o) {
        check_size(o);
        for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] -= o.comps_[j];
        return *this;
    }
    PolyVec& operator*=(const E& s) {
        for (auto& p : comps_) p *= s;
        return *this;
    }
    PolyVec& operator*=(const Poly<E>& s) {
        for (auto& p : comps_) p *= s;
        return *this;
    }
    PolyVec operator-() const {
        PolyVec r = *this;
        for (auto& p : r.comps_) p = -p;
        return r;
    }

    friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
    friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
    friend PolyVec operator*(PolyVec a, const E& s) { return a *= s; }
    friend PolyVec operator*(const E& s, PolyVec a) { return a *= s; }
    friend PolyVec operator*(const Poly<E>& s, PolyVec a) { return a *= s; }
    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.comps_ == b.comps_; }

    PolyVec shifted(std::size_t k) const {
        PolyVec r(comps_.size());
        for (std::size_t j = 0; j < comps_.size(); ++j) r.comps_[j] = comps_[j].shifted(k);
        return r;
    }

private:
    void check_size(const PolyVec& o) const {
        if (o.comps_.size() != comps_.size())
            throw Error(Errc::IndexOutOfRange, "adding vectors of V[X]^" + std::to_string(comps_.size()) +
                                                   " and V[X]^" + std::to_string(o.comps_.size()));
    }

    std::vector<Poly<E>> comps_;
};

template <Scalar E>
E coord(const PolyVec<E>& v, PivotIndex at) {
    return v.coord(at);
}

template <Scalar E>
PolyVec<E> shift_x(const PolyVec<E>& v) {
    return v.shifted(1);
}

/// Highest coordinate degree over a nonempty family.
template <Scalar E>
int family_degree(const std::vector<PolyVec<E>>& family) {
    if (family.empty()) throw Error(Errc::EmptyFamily, "degree of an empty family");
    int d = -1;
    for (const auto& v : family) d = std::max(d, v.degree());
    return d;
}

template <class E>
struct Pivot {
    PivotIndex pivot;
    E coeff;
};

/// Smallest coordinate that is a unit of V. NotPrimitive if there is none.
template <ValuationDomain D>
Pivot<element_t<D>> piv(const D& dom, const PolyVec<element_t<D>>& v) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto& c = v[j].coeffs();
        for (std::size_t r = 0; r < c.size(); ++r)
            if (dom.is_unit(c[r])) return {PivotIndex{static_cast<int>(j + 1), static_cast<int>(r)}, c[r]};
    }
    throw Error(Errc::NotPrimitive, "no coordinate is a unit");
}

template <ValuationDomain D>
bool is_primitive(const D& dom, const PolyVec<element_t<D>>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        for (const auto& c : v[j].coeffs())
            if (dom.is_unit(c)) return true;
    return false;
}

template <class E>
struct Reduced {
    PolyVec<E> reduced;
    E u;
    PivotIndex at;  ///< where the content was found
};

/// Divides v by its content, the first coordinate (in PivotIndex order) of
/// minimal valuation. Also accepts K-valued vectors, which it rescales into
/// primitive vectors of V[X]^n.
template <ValuationDomain D>
Reduced<element_t<D>> red_prim(const D& dom, const PolyVec<element_t<D>>& v) {
    using E = element_t<D>;
    std::vector<E> coeffs;
    std::vector<PivotIndex> where;
    v.for_each_coord([&](PivotIndex at, const E& c) {
        coeffs.push_back(c);
        where.push_back(at);
    });
    if (coeffs.empty()) throw Error(Errc::ZeroVector, "cannot reduce the zero vector");
    auto [u, pos] = content(dom, std::span<const E>(coeffs));
    return {v * inverse(u), u, where[pos]};
}

}  // namespace valsyz
