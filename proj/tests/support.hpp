#pragma once

// Shared helpers for the test binaries: parsing shorthands, random instance
// generators with fixed seeds, and small independent reference computations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "valsyz/oracle.hpp"
#include "valsyz/ratfunc.hpp"
#include "valsyz/syzygy.hpp"
#include "valsyz/text.hpp"
#include "valsyz/vxsat.hpp"

namespace testing {

using valsyz::Integer;
using valsyz::PolyVec;
using valsyz::Rational;
using valsyz::ZpDomain;
using QVec = PolyVec<Rational>;
using QPoly = valsyz::Poly<Rational>;

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

template <class D>
PolyVec<valsyz::element_t<D>> vec(const D& dom, const std::string& text) {
    return valsyz::parse_polyvec(dom, text);
}

template <class D>
std::vector<PolyVec<valsyz::element_t<D>>> vecs(const D& dom, const std::vector<std::string>& texts) {
    std::vector<PolyVec<valsyz::element_t<D>>> out;
    for (const auto& t : texts) out.push_back(vec(dom, t));
    return out;
}

/// A vector over K = Q, for values outside any Z_(p).
inline QVec kvec(const std::string& text) {
    return valsyz::parse_polyvec(valsyz::TrivialFieldDomain<valsyz::RationalField>{valsyz::RationalField{}}, text);
}

/// p-adic valuation by repeated integer division, independent of the library.
inline long count_p(Integer z, long p) {
    long v = 0;
    while (z % p == 0) {
        z /= p;
        ++v;
    }
    return v;
}

inline long val_p(const Rational& x, long p) {
    return count_p(x.get_num(), p) - count_p(x.get_den(), p);
}

/// Random instances over Z_(p): coefficients a/b with |a|, b <= bound and
/// p not dividing b. Coefficients are sparse and often divisible by p so
/// that saturation has something to do.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    Rational coeff(long p, long bound = 100, double zero = 0.35) {
        if (chance(zero)) return Rational(0);
        long num = uniform(-bound, bound);
        long den = 0;
        do {
            den = uniform(1, bound);
        } while (den % p == 0);
        return q(num, den);
    }

    /// A vector of V[X]^n of degree <= deg; with probability `scaled` every
    /// coefficient is made divisible by p.
    QVec vector(long p, std::size_t n, int deg, long bound = 100, double scaled = 0.3) {
        bool div = chance(scaled);
        long cap = div ? std::max<long>(1, bound / p) : bound;
        QVec v(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c;
            for (int r = 0; r <= deg; ++r) c.push_back(coeff(p, cap) * (div ? Rational(p) : Rational(1)));
            v[j] = QPoly(std::move(c));
        }
        return v;
    }

    QVec nonzero_vector(long p, std::size_t n, int deg, long bound = 100, double scaled = 0.3) {
        for (;;) {
            QVec v = vector(p, n, deg, bound, scaled);
            if (!v.is_zero()) return v;
        }
    }

    /// Family of m vectors, sometimes with a dependent vector mixed in.
    std::vector<QVec> family(long p, std::size_t n, std::size_t m, int deg, long bound = 100) {
        std::vector<QVec> out;
        for (std::size_t i = 0; i < m; ++i) {
            if (out.size() >= 2 && chance(0.25)) {
                QVec w = out[0] * coeff(p, 5, 0.0) + out[1] * Rational(p);
                out.push_back(w.is_zero() ? nonzero_vector(p, n, deg, bound) : w);
            } else {
                out.push_back(nonzero_vector(p, n, deg, bound));
            }
        }
        return out;
    }

    long prime() {
        static constexpr long primes[] = {2, 3, 5};
        return primes[uniform(0, 2)];
    }

private:
    std::mt19937_64 rng_;
};

/// Rank over K of a family of K-vectors given as dense rows.
inline std::size_t rank_q(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pick = rank;
        while (pick < rows.size() && rows[pick][c] == 0) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[rank], rows[pick]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Flattens vectors to coordinates on the degree-D slice.
inline std::vector<std::vector<Rational>> flat(const std::vector<QVec>& vs, int D) {
    std::vector<std::vector<Rational>> out;
    for (const auto& v : vs) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < v.size(); ++j)
            for (int r = 0; r <= D; ++r) row.push_back(v[j].coeff(static_cast<std::size_t>(r)));
        out.push_back(std::move(row));
    }
    return out;
}

/// Same K-span, by rank comparison.
inline bool same_k_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int D) {
    auto fa = flat(a, D), fb = flat(b, D), fab = fa;
    fab.insert(fab.end(), fb.begin(), fb.end());
    auto r = rank_q(fab);
    return r == rank_q(fa) && r == rank_q(fb);
}

inline int max_degree(const std::vector<QVec>& vs) {
    int d = 0;
    for (const auto& v : vs) d = std::max(d, v.degree());
    return d;
}

/// Rank over K(X) of polynomial vectors, by exact elimination with
/// rational-function entries.
inline std::size_t rank_kx(const std::vector<QVec>& vs) {
    using R = valsyz::RatFunc<Rational>;
    std::vector<std::vector<R>> rows;
    for (const auto& v : vs) {
        std::vector<R> row;
        for (std::size_t j = 0; j < v.size(); ++j) row.emplace_back(v[j]);
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pick = rank;
        while (pick < rows.size() && is_zero(rows[pick][c])) ++pick;
        if (pick == rows.size()) continue;
        std::swap(rows[rank], rows[pick]);
        R inv = inverse(rows[rank][c]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (is_zero(rows[r][c])) continue;
            R f = rows[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// a = c * b for a nonzero constant c.
inline bool proportional(const QVec& a, const QVec& b) {
    if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
    Rational c = 0;
    for (std::size_t j = 0; j < b.size() && c == 0; ++j)
        if (!b[j].is_zero()) c = a[j].coeff(static_cast<std::size_t>(b[j].degree())) / b[j].lead();
    return c != 0 && a == b * c;
}

/// Column with pivot `at`: X^r f_j plus non-unit entries at smaller indexes.
inline QVec pivot_column(std::size_t n, valsyz::PivotIndex at, long p) {
    QVec v = QVec::basis(n, at);
    if (at.index > 1) v[0] += QPoly::monomial(Rational(p), static_cast<std::size_t>(at.exponent));
    else if (at.exponent > 0) v[0] += QPoly(Rational(p));
    return v;
}

/// The worked configuration with n = 5, d = 4: six columns in round 0 on the
/// components {1, 1, 2, 3, 4, 4}, then a round-1 where the column with pivot
/// (4, 1) collides at (4, 2) and is reduced to a new pivot at (2, 0).
struct FigureConfig {
    static constexpr std::size_t n = 5;
    static constexpr int d = 4;
    std::vector<QVec> G0, H1;
};

inline FigureConfig figure_config(long p = 2) {
    using valsyz::PivotIndex;
    FigureConfig f;
    for (PivotIndex at : {PivotIndex{1, 2}, PivotIndex{1, 4}, PivotIndex{2, 2}, PivotIndex{3, 1}, PivotIndex{4, 1},
                          PivotIndex{4, 3}})
        f.G0.push_back(pivot_column(FigureConfig::n, at, p));
    for (PivotIndex at : {PivotIndex{1, 3}, PivotIndex{1, 5}, PivotIndex{2, 3}, PivotIndex{3, 2}, PivotIndex{2, 0},
                          PivotIndex{4, 4}})
        f.H1.push_back(pivot_column(FigureConfig::n, at, p));
    return f;
}

}  // namespace testing
