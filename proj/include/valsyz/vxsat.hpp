#pragma once

// V-saturation of a finitely generated V[X]-submodule M of V[X]^n.
//
// G is a strict echelon V-basis of the saturation of S + XS + ... + X^k S.
// Each round shifts the columns added in the previous round (H) by X and
// inserts them into G. The round counters follow the columns of H:
//   r_k  number of columns of G
//   N_k  number of columns of H
//   n_k  number of distinct pivot components among the columns of H
//   u_k  n_k * (1 + d + k), the coordinates available to those components
//   delta_k  supernumerary columns of H (another column of H has the same
//            component and a larger pivot exponent)
//   Delta_k  u_k - r_k
// The loop stops as soon as delta_k = 0; B then generates the saturation as
// a V[X]-module.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "valsyz/echelon.hpp"

namespace valsyz {

struct IterationRecord {
    int k = 0;
    long N = 0;
    long r = 0;
    long n = 0;
    long u = 0;
    long delta = 0;
    long Delta = 0;
    /// Shifted columns of the previous H whose shifted pivot was already a
    /// pivot of G_{k-1} (resp. of G_0) before insertion. Zero for k = 0.
    long collisions_current = 0;
    long collisions_initial = 0;

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

template <Scalar E>
struct SaturationResult {
    EchelonBasis<E> G;
    std::vector<PolyVec<E>> B;
    std::vector<IterationRecord> trace;
    int d = -1;

    int final_round() const { return trace.empty() ? 0 : trace.back().k; }
};

namespace detail {

inline long count_supernumerary(const std::vector<PivotIndex>& pivots) {
    std::map<int, int> top;
    for (const auto& p : pivots) {
        auto [it, fresh] = top.emplace(p.index, p.exponent);
        if (!fresh) it->second = std::max(it->second, p.exponent);
    }
    long count = 0;
    for (const auto& p : pivots)
        if (p.exponent < top[p.index]) ++count;
    return count;
}

inline long count_indexes(const std::vector<PivotIndex>& pivots) {
    std::set<int> idx;
    for (const auto& p : pivots) idx.insert(p.index);
    return static_cast<long>(idx.size());
}

template <ValuationDomain D>
std::vector<PivotIndex> pivots_of(const D& dom, const std::vector<PolyVec<element_t<D>>>& cols) {
    std::vector<PivotIndex> out;
    out.reserve(cols.size());
    for (const auto& c : cols) out.push_back(piv(dom, c).pivot);
    return out;
}

}  // namespace detail

/// Number of supernumerary columns of H. NotPrimitive if a column has no unit coordinate.
template <ValuationDomain D>
long defect(const D& dom, const std::vector<PolyVec<element_t<D>>>& H) {
    return detail::count_supernumerary(detail::pivots_of(dom, H));
}

/// Round counters for round k, with H the suffix of G added in that round.
template <ValuationDomain D>
IterationRecord counters(const D& dom, const std::vector<PolyVec<element_t<D>>>& G,
                         const std::vector<PolyVec<element_t<D>>>& H, int d, int k) {
    auto pivots = detail::pivots_of(dom, H);
    IterationRecord rec;
    rec.k = k;
    rec.N = static_cast<long>(H.size());
    rec.r = static_cast<long>(G.size());
    rec.n = detail::count_indexes(pivots);
    rec.u = rec.n * (1 + d + k);
    rec.delta = detail::count_supernumerary(pivots);
    rec.Delta = rec.u - rec.r;
    return rec;
}

template <ValuationDomain D>
IterationRecord counters(const D& dom, const EchelonBasis<element_t<D>>& G,
                         const std::vector<PolyVec<element_t<D>>>& H, int d, int k) {
    return counters(dom, G.cols(), H, d, k);
}

inline constexpr int default_max_iter = 64;

/// Generators B of Sat(V[X]-span(S)) together with the final basis G and the
/// per-round trace. Zero vectors of S are ignored. Throws EmptyInput when S
/// has no nonzero vector and IterationCapExceeded after `max_iter` rounds
/// without reaching defect 0.
template <ValuationDomain D>
SaturationResult<element_t<D>> saturate_vx(const D& dom, const std::vector<PolyVec<element_t<D>>>& S,
                                           int max_iter = default_max_iter) {
    using E = element_t<D>;
    using Vec = PolyVec<E>;

    std::vector<Vec> gens;
    for (const auto& s : S)
        if (!s.is_zero()) gens.push_back(s);
    if (gens.empty()) throw Error(Errc::EmptyInput, "no nonzero vector to saturate");
    if (max_iter < 1) throw Error(Errc::IterationCapExceeded, "max_iter must be at least 1");

    SaturationResult<E> res;
    res.d = family_degree(gens);
    for (const auto& s : gens) insert(dom, res.G, s);
    res.B = res.G.cols();
    std::size_t N = res.G.size();

    std::set<PivotIndex> initial_pivots;
    for (const auto& p : res.G.pivots()) initial_pivots.insert(p.pivot);

    auto tail = [&res](std::size_t count) {
        const auto& cols = res.G.cols();
        return std::vector<Vec>(cols.end() - static_cast<std::ptrdiff_t>(count), cols.end());
    };

    std::vector<Vec> H = tail(N);
    res.trace.push_back(counters(dom, res.G, H, res.d, 0));

    for (int k = 1;; ++k) {
        if (res.trace.back().delta == 0) break;
        if (k > max_iter)
            throw Error(Errc::IterationCapExceeded,
                        "defect still " + std::to_string(res.trace.back().delta) + " after " +
                            std::to_string(max_iter) + " rounds");

        long hit_current = 0, hit_initial = 0;
        N = 0;
        for (const auto& h : H) {
            Vec v = shift_x(h);
            PivotIndex shifted = piv(dom, v).pivot;
            if (res.G.has_pivot(shifted)) ++hit_current;
            if (initial_pivots.count(shifted) != 0) ++hit_initial;
            auto out = insert(dom, res.G, v);
            if (!out.v.is_zero()) ++N;
            if (out.new_generator) res.B.push_back(out.v);
        }
        H = tail(N);
        IterationRecord rec = counters(dom, res.G, H, res.d, k);
        rec.collisions_current = hit_current;
        rec.collisions_initial = hit_initial;
        res.trace.push_back(rec);
    }
    return res;
}

}  // namespace valsyz
