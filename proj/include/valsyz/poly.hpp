#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "valsyz/error.hpp"
#include "valsyz/scalar.hpp"

namespace valsyz {

/// Exact scalar usable as a polynomial coefficient. Field operations
/// (`inverse`) are only needed by the division routines.
template <class E>
concept Scalar = requires(const E& a, const E& b) {
    E(0);
    E(1);
    { a + b } -> std::convertible_to<E>;
    { a - b } -> std::convertible_to<E>;
    { a * b } -> std::convertible_to<E>;
    { -a } -> std::convertible_to<E>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

namespace detail {
template <class E>
bool scalar_is_zero(const E& x) {
    return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial; `coeffs()[i]` is the coefficient of X^i and
/// the last stored coefficient is never zero.
template <Scalar E>
class Poly {
public:
    Poly() = default;
    explicit Poly(E constant) {
        if (!detail::scalar_is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<E> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(E coeff, std::size_t degree) {
        Poly p;
        if (detail::scalar_is_zero(coeff)) return p;
        p.c_.assign(degree + 1, E(0));
        p.c_[degree] = std::move(coeff);
        return p;
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<E>& coeffs() const { return c_; }
    const E& lead() const { return c_.back(); }

    E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : E(0); }

    /// Index of the lowest nonzero coefficient; -1 for zero.
    int order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!detail::scalar_is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), E(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), E(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const E& s) {
        for (auto& x : c_) x = x * s;
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const E& s) { return a *= s; }
    friend Poly operator*(const E& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<E> r(a.c_.size() + b.c_.size() - 1, E(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::scalar_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Multiplication by X^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(k, E(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    E operator()(const E& x) const {
        E acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<E> c_;
};

template <Scalar E>
bool is_zero(const Poly<E>& p) {
    return p.is_zero();
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <Scalar E>
std::pair<Poly<E>, Poly<E>> divmod(const Poly<E>& a, const Poly<E>& b) {
    if (b.is_zero()) throw Error(Errc::NotDivisible, "polynomial division by zero");
    std::vector<E> rem = a.coeffs();
    int db = b.degree();
    E inv_lead = inverse(b.lead());
    if (a.degree() < db) return {Poly<E>{}, a};
    std::vector<E> quot(static_cast<std::size_t>(a.degree() - db + 1), E(0));
    for (int i = a.degree(); i >= db; --i) {
        const E& top = rem[static_cast<std::size_t>(i)];
        if (detail::scalar_is_zero(top)) continue;
        E q = top * inv_lead;
        auto shift = static_cast<std::size_t>(i - db);
        for (int j = 0; j <= db; ++j) {
            auto k = shift + static_cast<std::size_t>(j);
            rem[k] = rem[k] - q * b.coeffs()[static_cast<std::size_t>(j)];
        }
        quot[shift] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<E>(std::move(quot)), Poly<E>(std::move(rem))};
}

template <Scalar E>
Poly<E> monic(const Poly<E>& p) {
    if (p.is_zero()) return p;
    return p * inverse(p.lead());
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <Scalar E>
Poly<E> gcd(Poly<E> a, Poly<E> b) {
    while (!b.is_zero()) {
        Poly<E> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Exact quotient; throws NotDivisible when b does not divide a.
template <Scalar E>
Poly<E> div_exact(const Poly<E>& a, const Poly<E>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(Errc::NotDivisible, "inexact polynomial division");
    return q;
}

}  // namespace valsyz
