#pragma once

// Cross-checks of algorithm outputs against the brute-force oracle.

#include <algorithm>
#include <vector>

#include "valsyz/echelon.hpp"
#include "valsyz/oracle.hpp"
#include "valsyz/syzygy.hpp"

namespace valsyz {

/// G and the oracle span the same V-module.
template <ValuationDomain D>
bool free_saturation_agrees(const D& dom, const std::vector<PolyVec<element_t<D>>>& F,
                            const EchelonBasis<element_t<D>>& G) {
    return same_v_span(dom, G.cols(), brute_saturation_free(dom, F));
}

struct VxAgreement {
    /// Every generator lies in the saturation.
    bool generators_saturated = false;
    /// Every oracle vector of degree <= D lies in the V[X]-span of the generators.
    bool saturation_generated = false;

    bool ok() const { return generators_saturated && saturation_generated; }
};

/// Compares generators B of Sat(V[X].S) with the oracle on the degree-D slice.
///
/// Forward: each b in B lies in the oracle saturation at degree d + rounds,
/// where the algorithm produced it; the saturation is a V[X]-module so the
/// shifts of b follow.
/// Backward: an oracle vector of degree <= D is a K-combination of shifts
/// X^r s with r <= D - min deg S, and the columns built from those shifts are
/// V-combinations of X^r b of degree <= D + d - min deg S. That degree is the
/// bound used for the V[X]-span of B.
template <ValuationDomain D>
VxAgreement vx_saturation_agrees(const D& dom, const std::vector<PolyVec<element_t<D>>>& S,
                                 const std::vector<PolyVec<element_t<D>>>& B, int rounds, int degree_bound) {
    using Vec = PolyVec<element_t<D>>;
    std::vector<Vec> gens;
    for (const auto& s : S)
        if (!s.is_zero()) gens.push_back(s);
    VxAgreement out;
    if (gens.empty()) {
        out.generators_saturated = B.empty();
        out.saturation_generated = true;
        return out;
    }
    int d = family_degree(gens), low = d;
    for (const auto& s : gens) low = std::min(low, s.degree());

    int forward_bound = d + rounds;
    for (const auto& b : B) forward_bound = std::max(forward_bound, b.degree());
    auto wide = brute_saturation(dom, gens, forward_bound);
    out.generators_saturated = std::all_of(B.begin(), B.end(), [&](const Vec& b) { return v_span_contains(dom, wide, b); });

    auto slice = brute_saturation(dom, gens, std::max(degree_bound, d));
    auto spanned = shifts_up_to(B, std::max(degree_bound, d) + d - low);
    out.saturation_generated =
        std::all_of(slice.begin(), slice.end(), [&](const Vec& o) { return v_span_contains(dom, spanned, o); });
    return out;
}

struct SyzygyAgreement {
    /// U b = 0 for every generator b.
    bool generators_are_syzygies = false;
    /// Every oracle syzygy of degree <= D lies in the V[X]-span of the generators.
    bool syzygies_generated = false;

    bool ok() const { return generators_are_syzygies && syzygies_generated; }
};

/// The kernel basis is column-reduced, so a syzygy of degree <= D is a
/// K-combination of shifts X^r s with r <= D - min deg s; the bound on the
/// V[X]-span of B follows as in `vx_saturation_agrees`.
template <ValuationDomain D>
SyzygyAgreement syzygies_agree(const D& dom, const std::vector<PolyVec<element_t<D>>>& u,
                               const SyzygyResult<element_t<D>>& res, int degree_bound) {
    using E = element_t<D>;
    using Vec = PolyVec<E>;
    SyzygyAgreement out;
    KPolyMatrix<E> U(u);
    const auto& B = res.generators();
    out.generators_are_syzygies = std::all_of(B.begin(), B.end(), [&](const Vec& b) {
        if (!U.apply(b).is_zero()) return false;
        for (const auto& p : b.components())
            for (const auto& c : p.coeffs())
                if (!dom.contains(c)) return false;
        return true;
    });

    auto oracle = brute_syzygies(dom, u, degree_bound);
    if (res.scaled.empty()) {
        out.syzygies_generated = oracle.empty();
        return out;
    }
    int d = family_degree(res.scaled), low = d;
    for (const auto& s : res.scaled) low = std::min(low, s.degree());
    auto spanned = shifts_up_to(B, degree_bound + d - low);
    out.syzygies_generated =
        std::all_of(oracle.begin(), oracle.end(), [&](const Vec& o) { return v_span_contains(dom, spanned, o); });
    return out;
}

}  // namespace valsyz
