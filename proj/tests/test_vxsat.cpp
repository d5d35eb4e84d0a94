#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "valsyz/verify.hpp"

using namespace valsyz;
using testing::QVec;
using testing::vec;
using testing::vecs;

TEST_CASE("defect") {
    ZpDomain z2(2);
    CHECK(defect(z2, vecs(z2, {"1", "X"})) == 1);
    CHECK(defect(z2, testing::figure_config().G0) == 2);
    CHECK(defect(z2, vecs(z2, {"(1, 0)", "(0, X)"})) == 0);
    CHECK(defect(z2, std::vector<QVec>{}) == 0);
    CHECK_THROWS_WITH_AS(defect(z2, vecs(z2, {"2"})), doctest::Contains("NotPrimitive"), Error);
}

TEST_CASE("counters on the worked configuration") {
    ZpDomain z2(2);
    auto f = testing::figure_config();
    auto r0 = counters(z2, f.G0, f.G0, f.d, 0);
    CHECK(r0.n == 4);
    CHECK(r0.r == 6);
    CHECK(r0.u == 20);
    CHECK(r0.delta == 2);
    CHECK(r0.Delta == 14);

    auto G1 = f.G0;
    G1.insert(G1.end(), f.H1.begin(), f.H1.end());
    auto r1 = counters(z2, G1, f.H1, f.d, 1);
    CHECK(r1.n == 4);
    CHECK(r1.delta == 2);
    CHECK(r1.u == 24);
    CHECK(r1.Delta == 12);
    CHECK(r1.r == 12);

    auto empty = counters(z2, f.G0, std::vector<QVec>{}, f.d, 0);
    CHECK(empty.n == 0);
    CHECK(empty.delta == 0);
    CHECK(empty.u == 0);
}

TEST_CASE("saturate_vx examples") {
    ZpDomain z2(2);
    auto a = saturate_vx(z2, vecs(z2, {"(2, -X)"}));
    CHECK(a.B == vecs(z2, {"(-2, X)"}));
    CHECK(a.trace.size() == 1);
    CHECK(a.trace[0].delta == 0);

    auto b = saturate_vx(z2, vecs(z2, {"2", "X"}));
    CHECK(b.G.cols() == vecs(z2, {"1", "X", "X^2"}));
    CHECK(b.B == vecs(z2, {"1", "X"}));
    REQUIRE(b.trace.size() == 2);
    CHECK(b.trace[0].delta == 1);
    CHECK(b.trace[1].delta == 0);

    CHECK_THROWS_WITH_AS(saturate_vx(z2, vecs(z2, {"0"})), doctest::Contains("EmptyInput"), Error);
    CHECK_THROWS_WITH_AS(saturate_vx(z2, vecs(z2, {"2", "X"}), 0), doctest::Contains("IterationCapExceeded"), Error);
}

TEST_CASE("saturate_vx needs a shift to find the saturation") {
    // X*(X, 2) - 2*(2, X) = (X^2 - 4, 0) has unit content, but
    // (X, 2) + (2, X) = (X + 2)(1, 1) shows (1, 1) is in the saturation.
    ZpDomain z2(2);
    auto S = vecs(z2, {"(X, 2)", "(2, X)"});
    auto res = saturate_vx(z2, S);
    auto agree = vx_saturation_agrees(z2, S, res.B, res.final_round(), res.d + res.final_round() + 2);
    CHECK(agree.generators_saturated);
    CHECK(agree.saturation_generated);
}

namespace {

void check_trace(const SaturationResult<Rational>& res) {
    const auto& t = res.trace;
    for (std::size_t k = 0; k < t.size(); ++k) {
        CHECK(t[k].k == static_cast<int>(k));
        CHECK(t[k].u == t[k].n * (1 + res.d + t[k].k));
        CHECK(t[k].Delta == t[k].u - t[k].r);
        if (t[k].N > 0) CHECK(t[k].N == t[k].n + t[k].delta);
        if (k == 0) {
            CHECK(t[0].r == t[0].N);
            continue;
        }
        CHECK(t[k].r == t[k - 1].r + t[k].N);
        CHECK(t[k].delta <= t[k - 1].delta);
        CHECK(t[k].n >= t[k - 1].n);
        if (t[k].n == t[k - 1].n) CHECK(t[k].Delta == t[k - 1].Delta + t[k].n - t[k].N);
    }
    CHECK(t.back().delta == 0);
}

}  // namespace

TEST_CASE("property: traces, strictness and agreement with the oracle") {
    testing::Gen g(31);
    for (int i = 0; i < 80; ++i) {
        long p = g.prime();
        ZpDomain dom(p);
        auto n = static_cast<std::size_t>(g.uniform(1, 3));
        auto S = g.family(p, n, static_cast<std::size_t>(g.uniform(1, 3)), static_cast<int>(g.uniform(0, 2)), 20);
        auto res = saturate_vx(dom, S);
        CAPTURE(i);
        check_trace(res);
        CHECK(is_strict(dom, res.G));
        for (const auto& b : res.B)
            CHECK(std::find(res.G.cols().begin(), res.G.cols().end(), b) != res.G.cols().end());
        auto agree = vx_saturation_agrees(dom, S, res.B, res.final_round(), res.d + res.final_round() + 2);
        CHECK(agree.generators_saturated);
        CHECK(agree.saturation_generated);
    }
}

TEST_CASE("property: pivot shifts and index monotonicity") {
    // Rebuild each round from the final G: round k adds the columns
    // r_{k-1} .. r_k - 1. A pivot (j, r) of H_k reappears as (j, r + 1) in
    // H_{k+1} unless that position was already taken in G_k: either the
    // shifted column keeps it, or a column added earlier in the same round
    // took it first.
    testing::Gen g(32);
    for (int i = 0; i < 80; ++i) {
        long p = g.prime();
        ZpDomain dom(p);
        auto n = static_cast<std::size_t>(g.uniform(1, 3));
        auto S = g.family(p, n, static_cast<std::size_t>(g.uniform(1, 3)), static_cast<int>(g.uniform(0, 2)), 20);
        auto res = saturate_vx(dom, S);
        const auto& cols = res.G.cols();
        auto pivots_in = [&](long from, long to) {
            std::set<PivotIndex> out;
            for (long c = from; c < to; ++c) out.insert(piv(dom, cols[static_cast<std::size_t>(c)]).pivot);
            return out;
        };
        for (std::size_t k = 0; k + 1 < res.trace.size(); ++k) {
            const auto& cur = res.trace[k];
            const auto& next = res.trace[k + 1];
            auto h = pivots_in(cur.r - cur.N, cur.r);
            auto h_next = pivots_in(next.r - next.N, next.r);
            auto g_k = pivots_in(0, cur.r);
            long predicted_collisions = 0;
            for (const auto& pv : h) {
                PivotIndex up{pv.index, pv.exponent + 1};
                if (g_k.count(up)) ++predicted_collisions;
                else CHECK(h_next.count(up) == 1);
            }
            CHECK(predicted_collisions <= next.collisions_current);
            CHECK(next.collisions_initial <= next.collisions_current);
            std::set<int> idx, idx_next;
            for (const auto& pv : h) idx.insert(pv.index);
            for (const auto& pv : h_next) idx_next.insert(pv.index);
            for (int j : idx) CHECK(idx_next.count(j) == 1);
        }
    }
}

TEST_CASE("saturate_vx over k0(t) regular at 0") {
    RationalFunctionDomain<RationalField> dom{RationalField{}};
    auto S = vecs(dom, {"(X, t)", "(t, X)"});
    auto res = saturate_vx(dom, S);
    CHECK(res.trace.back().delta == 0);
    auto agree = vx_saturation_agrees(dom, S, res.B, res.final_round(), res.d + res.final_round() + 2);
    CHECK(agree.ok());
}

TEST_CASE("saturate_vx over a field keeps only K-structure") {
    TrivialFieldDomain<RationalField> dom{RationalField{}};
    auto res = saturate_vx(dom, vecs(dom, {"2", "X"}));
    CHECK(res.B == vecs(dom, {"1", "X"}));
}
