#pragma once

// Brute-force references for the saturation and syzygy algorithms. Nothing
// here reuses the echelon machinery: everything is flattened to coordinate
// vectors on the finite slice {X^r f_j : r <= D} and handled by dense linear
// algebra over K.
//
// Saturating a K-subspace W of K^N: with a K-basis as rows, repeatedly take
// the entry of least valuation among the rows and columns not yet used, scale
// its row so the entry becomes 1 and clear its column in every other row.
// The result has an identity block on the chosen columns and all entries in
// V, and any x in W cap V^N equals the combination of rows given by its
// coordinates on those columns. So the rows are a V-basis of W cap V^N.

#include <optional>
#include <vector>

#include "valsyz/polyvec.hpp"

namespace valsyz {

/// The V-module spanned by {X^r f_j : 1 <= j <= n, 0 <= r <= D}, indexed in
/// PivotIndex order: coordinate (j, r) sits at (j - 1) * (D + 1) + r.
struct DegreeBoundedSlice {
    std::size_t n = 0;
    int D = 0;

    std::size_t dimension() const { return n * static_cast<std::size_t>(D + 1); }
    std::size_t offset(PivotIndex at) const {
        return static_cast<std::size_t>(at.index - 1) * static_cast<std::size_t>(D + 1) +
               static_cast<std::size_t>(at.exponent);
    }

    template <Scalar E>
    std::vector<E> flatten(const PolyVec<E>& v) const {
        if (v.degree() > D) throw Error(Errc::DegreeExceeded, "vector of degree " + std::to_string(v.degree()) +
                                                                  " outside the slice of degree " + std::to_string(D));
        std::vector<E> out(dimension(), E(0));
        v.for_each_coord([&](PivotIndex at, const E& c) { out[offset(at)] = c; });
        return out;
    }

    template <Scalar E>
    PolyVec<E> unflatten(const std::vector<E>& x) const {
        PolyVec<E> v(n);
        auto width = static_cast<std::size_t>(D + 1);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = Poly<E>(std::vector<E>(x.begin() + static_cast<std::ptrdiff_t>(j * width),
                                          x.begin() + static_cast<std::ptrdiff_t>((j + 1) * width)));
        return v;
    }
};

namespace oracle_detail {

template <class E>
using Row = std::vector<E>;

/// Nonzero rows of the reduced row echelon form over K.
template <Scalar E>
std::vector<Row<E>> rref(std::vector<Row<E>> rows) {
    if (rows.empty()) return rows;
    std::size_t width = rows.front().size(), lead = 0;
    for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
        std::size_t pick = lead;
        while (pick < rows.size() && is_zero(rows[pick][col])) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[lead], rows[pick]);
        E inv = inverse(rows[lead][col]);
        for (auto& x : rows[lead]) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || is_zero(rows[i][col])) continue;
            E f = rows[i][col];
            for (std::size_t c = col; c < width; ++c) rows[i][c] = rows[i][c] - f * rows[lead][c];
        }
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

/// V-basis of (K-span of independent rows) cap V^N, see the file comment.
template <ValuationDomain D>
std::vector<Row<element_t<D>>> saturate_rows(const D& dom, std::vector<Row<element_t<D>>> rows) {
    using E = element_t<D>;
    if (rows.empty()) return rows;
    const std::size_t width = rows.front().size();
    std::vector<bool> row_done(rows.size(), false), col_used(width, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < rows.size(); ++step) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (row_done[i]) continue;
            for (std::size_t c = 0; c < width; ++c) {
                if (col_used[c] || is_zero(rows[i][c])) continue;
                if (!best || !divides(dom, rows[best->first][best->second], rows[i][c])) best = {i, c};
            }
        }
        if (!best) throw Error(Errc::AllZero, "rows are not linearly independent");
        auto [pi, pc] = *best;
        E inv = inverse(rows[pi][pc]);
        for (auto& x : rows[pi]) x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pi || is_zero(rows[i][pc])) continue;
            E f = rows[i][pc];
            for (std::size_t c = 0; c < width; ++c) rows[i][c] = rows[i][c] - f * rows[pi][c];
        }
        row_done[pi] = true;
        col_used[pc] = true;
        order.push_back(pi);
    }
    std::vector<Row<E>> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(std::move(rows[i]));
    return out;
}

}  // namespace oracle_detail

/// All X^r f with f in F and deg(X^r f) <= D (zero vectors dropped).
template <Scalar E>
std::vector<PolyVec<E>> shifts_up_to(const std::vector<PolyVec<E>>& F, int D) {
    std::vector<PolyVec<E>> out;
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        for (int r = 0; r + f.degree() <= D; ++r) out.push_back(f.shifted(static_cast<std::size_t>(r)));
    }
    return out;
}

/// V-basis of Sat(V-span(F)) computed as K.F cap V^N, with no X-shifts.
template <ValuationDomain D>
std::vector<PolyVec<element_t<D>>> brute_saturation_free(const D& dom, const std::vector<PolyVec<element_t<D>>>& F) {
    using E = element_t<D>;
    if (F.empty()) return {};
    DegreeBoundedSlice slice{F.front().size(), std::max(0, family_degree(F))};
    std::vector<oracle_detail::Row<E>> rows;
    for (const auto& f : F) rows.push_back(slice.flatten(f));
    std::vector<PolyVec<E>> out;
    for (const auto& row : oracle_detail::saturate_rows(dom, oracle_detail::rref(std::move(rows))))
        out.push_back(slice.unflatten(row));
    return out;
}

/// V-basis of K.{X^r f : f in F, deg <= D} cap (degree <= D slice), the
/// degree-D part of the saturation whenever K.M is generated in degree <= D.
template <ValuationDomain D>
std::vector<PolyVec<element_t<D>>> brute_saturation(const D& dom, const std::vector<PolyVec<element_t<D>>>& F,
                                                    int degree_bound) {
    using E = element_t<D>;
    if (F.empty()) return {};
    for (const auto& f : F)
        if (f.degree() > degree_bound)
            throw Error(Errc::DegreeExceeded, "input of degree " + std::to_string(f.degree()) +
                                                  " exceeds the bound " + std::to_string(degree_bound));
    DegreeBoundedSlice slice{F.front().size(), degree_bound};
    std::vector<oracle_detail::Row<E>> rows;
    for (const auto& f : shifts_up_to(F, degree_bound)) rows.push_back(slice.flatten(f));
    std::vector<PolyVec<E>> out;
    for (const auto& row : oracle_detail::saturate_rows(dom, oracle_detail::rref(std::move(rows))))
        out.push_back(slice.unflatten(row));
    return out;
}

/// V-basis of the syzygies f of u_1..u_n with every deg f_j <= D.
template <ValuationDomain D>
std::vector<PolyVec<element_t<D>>> brute_syzygies(const D& dom, const std::vector<PolyVec<element_t<D>>>& u,
                                                  int degree_bound) {
    using E = element_t<D>;
    if (u.empty()) return {};
    const std::size_t n = u.size(), k = u.front().size();
    DegreeBoundedSlice slice{n, degree_bound};
    int du = std::max(0, family_degree(u));
    auto eq_per_row = static_cast<std::size_t>(degree_bound + du + 1);

    // One equation per (component i, power e) of sum_j f_j u_j.
    std::vector<oracle_detail::Row<E>> eqs(k * eq_per_row, oracle_detail::Row<E>(slice.dimension(), E(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            const auto& c = u[j][i].coeffs();
            for (std::size_t s = 0; s < c.size(); ++s)
                for (int r = 0; r <= degree_bound; ++r)
                    eqs[i * eq_per_row + s + static_cast<std::size_t>(r)]
                       [slice.offset(PivotIndex{static_cast<int>(j + 1), r})] = c[s];
        }

    // Null space from the reduced echelon form: one vector per free column.
    auto reduced = oracle_detail::rref(std::move(eqs));
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(slice.dimension(), false);
    for (const auto& row : reduced) {
        std::size_t c = 0;
        while (is_zero(row[c])) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<oracle_detail::Row<E>> null_basis;
    for (std::size_t free = 0; free < slice.dimension(); ++free) {
        if (is_pivot[free]) continue;
        oracle_detail::Row<E> x(slice.dimension(), E(0));
        x[free] = E(1);
        for (std::size_t r = 0; r < reduced.size(); ++r) x[pivot_col[r]] = -reduced[r][free];
        null_basis.push_back(std::move(x));
    }

    std::vector<PolyVec<E>> out;
    for (const auto& row : oracle_detail::saturate_rows(dom, oracle_detail::rref(std::move(null_basis))))
        out.push_back(slice.unflatten(row));
    return out;
}

/// Is v in the V-module spanned by gens (entries of gens in V)? Decided by
/// unimodular elimination on the generators with least-valuation pivots.
template <ValuationDomain D>
bool v_span_contains(const D& dom, const std::vector<PolyVec<element_t<D>>>& gens, const PolyVec<element_t<D>>& v) {
    using E = element_t<D>;
    int deg = v.degree();
    for (const auto& g : gens) deg = std::max(deg, g.degree());
    if (deg < 0) return true;
    DegreeBoundedSlice slice{v.size(), deg};
    std::vector<oracle_detail::Row<E>> G;
    for (const auto& g : gens) G.push_back(slice.flatten(g));
    auto x = slice.flatten(v);
    const std::size_t width = slice.dimension();

    std::vector<bool> alive(G.size(), true);
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t g = 0; g < G.size(); ++g) {
            if (!alive[g]) continue;
            for (std::size_t c = 0; c < width; ++c) {
                if (is_zero(G[g][c])) continue;
                if (!best || !divides(dom, G[best->first][best->second], G[g][c])) best = {g, c};
            }
        }
        if (!best) break;
        auto [pg, pc] = *best;
        E inv = inverse(G[pg][pc]);
        for (std::size_t h = 0; h < G.size(); ++h) {
            if (!alive[h] || h == pg || is_zero(G[h][pc])) continue;
            E f = G[h][pc] * inv;
            for (std::size_t c = 0; c < width; ++c) G[h][c] = G[h][c] - f * G[pg][c];
        }
        E t = x[pc] * inv;
        if (!dom.contains(t)) return false;
        if (!is_zero(t))
            for (std::size_t c = 0; c < width; ++c) x[c] = x[c] - t * G[pg][c];
        alive[pg] = false;
    }
    for (const auto& c : x)
        if (!is_zero(c)) return false;
    return true;
}

/// Mutual containment of two V-spans.
template <ValuationDomain D>
bool same_v_span(const D& dom, const std::vector<PolyVec<element_t<D>>>& a, const std::vector<PolyVec<element_t<D>>>& b) {
    for (const auto& v : a)
        if (!v_span_contains(dom, b, v)) return false;
    for (const auto& v : b)
        if (!v_span_contains(dom, a, v)) return false;
    return true;
}

}  // namespace valsyz
