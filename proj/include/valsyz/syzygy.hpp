#pragma once

// Syzygies over V[X]: the V[X]-syzygy module of u_1..u_n in V[X]^k is the
// V-saturation of the V[X]-module spanned by any K[X]-generating set of the
// K[X]-syzygies, once those are scaled into V[X]^n.

#include <optional>
#include <string>
#include <vector>

#include "valsyz/vxsat.hpp"

namespace valsyz {

/// k x n matrix over K[X], stored by columns.
template <Scalar E>
class KPolyMatrix {
public:
    KPolyMatrix(std::size_t rows, std::vector<PolyVec<E>> cols) : rows_(rows), cols_(std::move(cols)) {
        for (const auto& c : cols_)
            if (c.size() != rows_)
                throw Error(Errc::IndexOutOfRange, "column of length " + std::to_string(c.size()) +
                                                       " in a matrix with " + std::to_string(rows_) + " rows");
    }
    explicit KPolyMatrix(const std::vector<PolyVec<E>>& cols)
        : KPolyMatrix(cols.empty() ? 0 : cols.front().size(), cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const PolyVec<E>& col(std::size_t j) const { return cols_[j]; }
    const std::vector<PolyVec<E>>& columns() const { return cols_; }

    /// U * f = sum_j f_j u_j.
    PolyVec<E> apply(const PolyVec<E>& f) const {
        if (f.size() != cols_.size())
            throw Error(Errc::IndexOutOfRange, "vector length does not match the column count");
        PolyVec<E> out(rows_);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (!f[j].is_zero()) out += f[j] * cols_[j];
        return out;
    }

private:
    std::size_t rows_;
    std::vector<PolyVec<E>> cols_;
};

namespace syzygy_detail {

/// Coefficients c (not all zero) with sum_i c_i cols[i] = 0, if any.
template <Scalar E>
std::optional<std::vector<E>> linear_relation(const std::vector<std::vector<E>>& cols) {
    const std::size_t m = cols.size(), n = cols.empty() ? 0 : cols.front().size();
    // Row-reduce the n x m matrix [cols], tracking pivot columns.
    std::vector<std::vector<E>> a(n, std::vector<E>(m, E(0)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t r = 0; r < n; ++r) a[r][i] = cols[i][r];
    std::vector<std::size_t> pivot_of_row;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t pick = row;
        while (pick < n && is_zero(a[pick][c])) ++pick;
        if (pick == n) continue;
        std::swap(a[row], a[pick]);
        E inv = inverse(a[row][c]);
        for (auto& x : a[row]) x = x * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || is_zero(a[r][c])) continue;
            E f = a[r][c];
            for (std::size_t k = 0; k < m; ++k) a[r][k] = a[r][k] - f * a[row][k];
        }
        pivot_of_row.push_back(c);
        ++row;
    }
    if (pivot_of_row.size() == m) return std::nullopt;
    std::vector<bool> is_pivot(m, false);
    for (auto c : pivot_of_row) is_pivot[c] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    std::vector<E> rel(m, E(0));
    rel[free] = E(1);
    for (std::size_t r = 0; r < pivot_of_row.size(); ++r) rel[pivot_of_row[r]] = -a[r][free];
    return rel;
}

/// Column-reduces a K[X]-basis: while the leading coefficient vectors are
/// dependent, lowers the degree of the highest-degree column involved. The
/// result has the predictable-degree property
/// deg(sum a_i v_i) = max(deg a_i + deg v_i).
template <Scalar E>
void column_reduce(std::vector<PolyVec<E>>& basis) {
    for (;;) {
        std::vector<std::vector<E>> leads;
        for (const auto& v : basis) {
            auto d = static_cast<std::size_t>(v.degree());
            std::vector<E> lc;
            for (const auto& p : v.components()) lc.push_back(p.coeff(d));
            leads.push_back(std::move(lc));
        }
        auto rel = linear_relation(leads);
        if (!rel) return;
        std::size_t top = 0;
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!is_zero((*rel)[i]) && (!found || basis[i].degree() > basis[top].degree())) {
                top = i;
                found = true;
            }
        const int dt = basis[top].degree();
        PolyVec<E> v = basis[top] * (*rel)[top];
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i == top || is_zero((*rel)[i])) continue;
            v += basis[i].shifted(static_cast<std::size_t>(dt - basis[i].degree())) * (*rel)[i];
        }
        basis[top] = std::move(v);
    }
}

}  // namespace syzygy_detail

/// K[X]-basis of {f : U f = 0} by unimodular column reduction. Row by row,
/// the active columns are reduced by polynomial division against the one of
/// least degree until a single nonzero entry (the row pivot) remains; that
/// column then leaves the active set. The identity companion records the
/// column operations, and its active columns at the end span the kernel.
/// Each output vector is divided by the monic gcd of its entries, and the
/// family is then column-reduced so its degrees are minimal.
template <Scalar E>
std::vector<PolyVec<E>> kernel_kx(const KPolyMatrix<E>& U) {
    const std::size_t n = U.cols();
    std::vector<PolyVec<E>> M = U.columns();
    std::vector<PolyVec<E>> T;
    T.reserve(n);
    for (std::size_t j = 0; j < n; ++j) T.push_back(PolyVec<E>::basis(n, PivotIndex{static_cast<int>(j + 1), 0}));

    std::vector<std::size_t> active(n);
    for (std::size_t j = 0; j < n; ++j) active[j] = j;

    for (std::size_t i = 0; i < U.rows(); ++i) {
        for (;;) {
            std::vector<std::size_t> nz;
            for (auto c : active)
                if (!M[c][i].is_zero()) nz.push_back(c);
            if (nz.empty()) break;
            std::size_t p = nz.front();
            for (auto c : nz)
                if (M[c][i].degree() < M[p][i].degree()) p = c;
            if (nz.size() == 1) {
                std::erase(active, p);
                break;
            }
            for (auto c : nz) {
                if (c == p) continue;
                Poly<E> q = divmod(M[c][i], M[p][i]).first;
                if (q.is_zero()) continue;
                M[c] -= q * M[p];
                T[c] -= q * T[p];
            }
        }
    }

    std::vector<PolyVec<E>> basis;
    for (auto c : active) {
        Poly<E> g;
        for (const auto& entry : T[c].components()) g = gcd(g, entry);
        PolyVec<E> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = div_exact(T[c][j], g);
        basis.push_back(std::move(v));
    }
    syzygy_detail::column_reduce(basis);
    return basis;
}

/// alpha * v in V[X]^n with a unit content, alpha in K: the coordinate of
/// minimal valuation (first in PivotIndex order) becomes 1.
template <ValuationDomain D>
PolyVec<element_t<D>> primitive_scale(const D& dom, const PolyVec<element_t<D>>& v) {
    return red_prim(dom, v).reduced;
}

template <Scalar E>
struct SyzygyResult {
    /// K[X]-basis of the K[X]-syzygies.
    std::vector<PolyVec<E>> kernel;
    /// The kernel vectors scaled into primitive vectors of V[X]^n.
    std::vector<PolyVec<E>> scaled;
    /// Saturation of the V[X]-span of `scaled`; empty when the kernel is 0.
    SaturationResult<E> saturation;

    const std::vector<PolyVec<E>>& generators() const { return saturation.B; }
};

/// Generators of the V[X]-syzygy module of the columns u_1..u_n in V[X]^k.
template <ValuationDomain D>
SyzygyResult<element_t<D>> syzygy_vx(const D& dom, const std::vector<PolyVec<element_t<D>>>& u,
                                     int max_iter = default_max_iter) {
    using E = element_t<D>;
    if (u.empty()) throw Error(Errc::EmptyInput, "no vectors given");
    for (const auto& col : u)
        for (const auto& p : col.components())
            for (const auto& c : p.coeffs())
                if (!dom.contains(c)) throw Error(Errc::NotInDomain, dom.render(c) + " is not in " + dom.name());

    SyzygyResult<E> res;
    res.kernel = kernel_kx(KPolyMatrix<E>(u));
    for (const auto& v : res.kernel) res.scaled.push_back(primitive_scale(dom, v));
    if (!res.scaled.empty()) res.saturation = saturate_vx(dom, res.scaled, max_iter);
    return res;
}

}  // namespace valsyz
