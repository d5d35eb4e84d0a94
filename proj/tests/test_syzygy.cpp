#include <doctest.h>

#include "support.hpp"
#include "valsyz/verify.hpp"

using namespace valsyz;
using testing::q;
using testing::QVec;
using testing::vec;
using testing::vecs;

namespace {

KPolyMatrix<Rational> row_matrix(const ZpDomain& dom, const std::vector<std::string>& entries) {
    return KPolyMatrix<Rational>(vecs(dom, entries));
}

}  // namespace

TEST_CASE("kernel_kx examples") {
    ZpDomain z2(2);
    auto a = kernel_kx(row_matrix(z2, {"X", "2"}));
    REQUIRE(a.size() == 1);
    CHECK(testing::proportional(a[0], testing::kvec("(1, -X/2)")));

    CHECK(kernel_kx(row_matrix(z2, {"1"})).empty());

    auto b = kernel_kx(row_matrix(z2, {"X", "X"}));
    REQUIRE(b.size() == 1);
    CHECK(testing::proportional(b[0], vec(z2, "(1, -1)")));

    auto zero = kernel_kx(row_matrix(z2, {"0", "X"}));
    REQUIRE(zero.size() == 1);
    CHECK(testing::proportional(zero[0], vec(z2, "(1, 0)")));
}

TEST_CASE("primitive_scale") {
    ZpDomain z2(2), z3(3);
    // The coordinate of least valuation becomes 1.
    QVec a = primitive_scale(z2, testing::kvec("(1, -X/2)"));
    CHECK(a == vec(z2, "(-2, X)"));
    CHECK(a == vec(z2, "(2, -X)") * Rational(-1));

    QVec b = primitive_scale(z2, vec(z2, "(3, 5*X)"));
    CHECK(b == vec(z2, "(1, 5*X/3)"));
    CHECK(z2.is_unit(Rational(3)));

    CHECK(primitive_scale(z3, testing::kvec("(1/3, 1/9)")) == vec(z3, "(3, 1)"));
    CHECK_THROWS_WITH_AS(primitive_scale(z2, QVec(2)), doctest::Contains("ZeroVector"), Error);
}

TEST_CASE("syzygy_vx examples") {
    ZpDomain z2(2);
    auto u = vecs(z2, {"X", "2"});
    auto res = syzygy_vx(z2, u);
    CHECK(res.generators() == vecs(z2, {"(-2, X)"}));
    CHECK(syzygies_agree(z2, u, res, 6).ok());

    auto u2 = vecs(z2, {"1", "X"});
    auto res2 = syzygy_vx(z2, u2);
    REQUIRE(res2.generators().size() == 1);
    CHECK(testing::proportional(res2.generators()[0], vec(z2, "(X, -1)")));
    CHECK(syzygies_agree(z2, u2, res2, 5).ok());

    auto res3 = syzygy_vx(z2, vecs(z2, {"1"}));
    CHECK(res3.generators().empty());
    CHECK(res3.kernel.empty());

    CHECK_THROWS_WITH_AS(syzygy_vx(z2, std::vector<QVec>{}), doctest::Contains("EmptyInput"), Error);
    CHECK_THROWS_WITH_AS(syzygy_vx(z2, std::vector<QVec>{QVec(std::vector<testing::QPoly>{testing::QPoly(q(1, 2))})}),
                         doctest::Contains("NotInDomain"), Error);
}

TEST_CASE("syzygies where the saturation adds generators") {
    // Three columns of V[X]^2 over Z_(2), checked against the oracle.
    ZpDomain z2(2);
    auto u = vecs(z2, {"(X + 2, 2*X)", "(X, 4)", "(2, X)"});
    auto res = syzygy_vx(z2, u);
    auto agree = syzygies_agree(z2, u, res, 4);
    CHECK(agree.generators_are_syzygies);
    CHECK(agree.syzygies_generated);
}

namespace {

std::vector<QVec> random_columns(testing::Gen& g, long p, std::size_t k, std::size_t n, int deg, long bound) {
    std::vector<QVec> u;
    for (std::size_t j = 0; j < n; ++j) u.push_back(g.vector(p, k, deg, bound, 0.4));
    return u;
}

std::vector<QVec> rows_of(const std::vector<QVec>& cols, std::size_t k) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < k; ++i) {
        QVec r(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) r[j] = cols[j][i];
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

TEST_CASE("property: kernel rank, exactness and completeness") {
    testing::Gen g(41);
    for (int i = 0; i < 60; ++i) {
        long p = g.prime();
        ZpDomain dom(p);
        auto k = static_cast<std::size_t>(g.uniform(1, 2));
        auto n = static_cast<std::size_t>(g.uniform(1, 3));
        auto u = random_columns(g, p, k, n, static_cast<int>(g.uniform(0, 2)), 10);
        CAPTURE(i);
        auto kernel = kernel_kx(KPolyMatrix<Rational>(u));
        CHECK(kernel.size() == n - testing::rank_kx(rows_of(u, k)));

        auto res = syzygy_vx(dom, u);
        const auto& B = res.generators();
        // The K[X]-span of B is the whole K[X]-kernel: same rank, and the
        // kernel is saturated over K[X].
        if (!kernel.empty()) CHECK(testing::rank_kx(B) == kernel.size());
        int d = res.scaled.empty() ? 0 : res.saturation.d;
        int D = std::min(d + res.saturation.final_round() + 2, 6);
        auto agree = syzygies_agree(dom, u, res, D);
        CHECK(agree.generators_are_syzygies);
        CHECK(agree.syzygies_generated);
    }
}

TEST_CASE("property: scaling by a unit keeps the syzygy module") {
    testing::Gen g(42);
    for (int i = 0; i < 40; ++i) {
        long p = g.prime();
        ZpDomain dom(p);
        auto u = random_columns(g, p, 1, static_cast<std::size_t>(g.uniform(2, 3)), 2, 10);
        Rational c;
        do {
            c = g.coeff(p, 9, 0.0);
        } while (!dom.is_unit(c));
        auto cu = u;
        for (auto& col : cu) col *= c;
        auto a = syzygy_vx(dom, u).generators();
        auto b = syzygy_vx(dom, cu).generators();
        const int D = 6;
        auto sa = shifts_up_to(a, D), sb = shifts_up_to(b, D);
        for (const auto& v : b)
            if (v.degree() <= 3) CHECK(v_span_contains(dom, sa, v));
        for (const auto& v : a)
            if (v.degree() <= 3) CHECK(v_span_contains(dom, sb, v));
    }
}

TEST_CASE("syzygies over k0(t)") {
    RationalFunctionDomain<RationalField> dom{RationalField{}};
    auto u = vecs(dom, {"X", "t"});
    auto res = syzygy_vx(dom, u);
    CHECK(res.generators() == vecs(dom, {"(-t, X)"}));
    CHECK(syzygies_agree(dom, u, res, 4).ok());
}
