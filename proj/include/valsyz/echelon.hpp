#pragma once

// Saturation of a finitely generated V-module inside a free V-module, kept as
// a list of primitive columns in strict echelon form:
//   - pivots are pairwise distinct;
//   - a column has a zero coordinate at the pivot of every earlier column.
// Such a family is a basis of a saturated module.

#include <optional>
#include <string>
#include <vector>

#include "valsyz/polyvec.hpp"

namespace valsyz {

template <Scalar E>
class EchelonBasis {
public:
    EchelonBasis() = default;

    /// Adopts existing columns, recomputing pivots; throws NotPrimitive on a
    /// non-primitive column. The strictness invariants are not enforced here,
    /// see `is_strict`.
    template <ValuationDomain D>
    static EchelonBasis from_columns(const D& dom, std::vector<PolyVec<E>> cols) {
        EchelonBasis b;
        for (auto& c : cols) {
            auto p = piv(dom, c);
            b.append(std::move(c), std::move(p));
        }
        return b;
    }

    std::size_t size() const { return cols_.size(); }
    bool empty() const { return cols_.empty(); }
    const PolyVec<E>& operator[](std::size_t i) const { return cols_[i]; }
    const std::vector<PolyVec<E>>& cols() const { return cols_; }
    const std::vector<Pivot<E>>& pivots() const { return pivots_; }

    bool has_pivot(PivotIndex at) const {
        for (const auto& p : pivots_)
            if (p.pivot == at) return true;
        return false;
    }

    void append(PolyVec<E> col, Pivot<E> pivot) {
        cols_.push_back(std::move(col));
        pivots_.push_back(std::move(pivot));
    }

private:
    std::vector<PolyVec<E>> cols_;
    std::vector<Pivot<E>> pivots_;
};

/// Checks both echelon invariants and that every column is primitive with
/// the recorded pivot.
template <ValuationDomain D>
bool is_strict(const D& dom, const EchelonBasis<element_t<D>>& basis) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!is_primitive(dom, basis[k])) return false;
        auto p = piv(dom, basis[k]);
        if (p.pivot != basis.pivots()[k].pivot || !(p.coeff == basis.pivots()[k].coeff)) return false;
        for (std::size_t j = 0; j < k; ++j) {
            if (basis.pivots()[j].pivot == p.pivot) return false;
            if (!is_zero(basis[k].coord(basis.pivots()[j].pivot))) return false;
        }
    }
    return true;
}

/// Clears, in list order, the coordinate of `col` at each pivot of `basis`:
/// col <- col - (c_s / cpiv) * basis[j]. The pivot coefficients are units, so
/// the multipliers stay in V.
template <ValuationDomain D>
PolyVec<element_t<D>> gauss_eliminate(const D&, PolyVec<element_t<D>> col, const EchelonBasis<element_t<D>>& basis) {
    using E = element_t<D>;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& p = basis.pivots()[j];
        E c = col.coord(p.pivot);
        if (is_zero(c)) continue;
        col -= basis[j] * E(c * inverse(p.coeff));
        if (col.is_zero()) break;
    }
    return col;
}

template <class E>
struct InsertOutcome {
    /// Zero when the input already lay in the span, otherwise the new primitive column.
    PolyVec<E> v;
    /// True when the content removed by the reduction was not a unit, i.e. v
    /// is not in V.L + V.v0.
    bool new_generator = false;
};

/// In-place insertion: eliminates v0 against `basis`, reduces the remainder
/// to a primitive vector and appends it. Afterwards span(basis) is the
/// saturation of span(old basis) + V.v0.
template <ValuationDomain D>
InsertOutcome<element_t<D>> insert(const D& dom, EchelonBasis<element_t<D>>& basis, const PolyVec<element_t<D>>& v0) {
    if (v0.is_zero()) throw Error(Errc::ZeroVector, "echelon insertion of the zero vector");
    auto rest = gauss_eliminate(dom, v0, basis);
    if (rest.is_zero()) return {std::move(rest), false};
    auto red = red_prim(dom, rest);
    auto p = piv(dom, red.reduced);
    basis.append(red.reduced, std::move(p));
    return {std::move(red.reduced), !dom.is_unit(red.u)};
}

template <class E>
struct EchelonInsertResult {
    PolyVec<E> v;
    bool new_generator = false;
    EchelonBasis<E> basis;
};

/// Value-semantics form of `insert`.
template <ValuationDomain D>
EchelonInsertResult<element_t<D>> echelon_insert(const D& dom, EchelonBasis<element_t<D>> basis,
                                                 const PolyVec<element_t<D>>& v0) {
    auto out = insert(dom, basis, v0);
    return {std::move(out.v), out.new_generator, std::move(basis)};
}

/// Basis of Sat(V-span(F)) in strict echelon form. Zero columns are skipped.
/// Treating F1 then F2 extends the result for F1.
template <ValuationDomain D>
EchelonBasis<element_t<D>> saturate_free(const D& dom, const std::vector<PolyVec<element_t<D>>>& family) {
    EchelonBasis<element_t<D>> basis;
    for (const auto& v : family)
        if (!v.is_zero()) insert(dom, basis, v);
    return basis;
}

/// Coefficients of v on a strict echelon basis, or nullopt when v is not in
/// its V-span.
template <ValuationDomain D>
std::optional<std::vector<element_t<D>>> member(const D& dom, const EchelonBasis<element_t<D>>& basis,
                                                PolyVec<element_t<D>> v) {
    using E = element_t<D>;
    std::vector<E> coeffs;
    coeffs.reserve(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& p = basis.pivots()[j];
        E x = v.coord(p.pivot) * inverse(p.coeff);
        if (!dom.contains(x)) return std::nullopt;
        if (!is_zero(x)) v -= basis[j] * x;
        coeffs.push_back(std::move(x));
    }
    if (!v.is_zero()) return std::nullopt;
    return coeffs;
}

}  // namespace valsyz
