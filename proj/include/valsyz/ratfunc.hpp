#pragma once

#include <utility>

#include "valsyz/poly.hpp"

namespace valsyz {

/// Element of F(t) kept as num/den with gcd(num, den) = 1 and den monic.
template <Scalar F>
class RatFunc {
public:
    RatFunc() : den_(F(1)) {}
    RatFunc(int v) : num_(F(v)), den_(F(1)) {}  // NOLINT: small-integer literal
    explicit RatFunc(Poly<F> num) : num_(std::move(num)), den_(F(1)) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error(Errc::NotDivisible, "rational function with zero denominator");
        normalize();
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    /// Order of vanishing at t = 0; meaningless for zero.
    int order_at_zero() const { return num_.order() - den_.order(); }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * inverse(b); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool is_zero(const RatFunc& x) { return x.num_.is_zero(); }
    friend RatFunc inverse(const RatFunc& x) {
        if (x.num_.is_zero()) throw Error(Errc::NotDivisible, "inverse of zero");
        return RatFunc(x.den_, x.num_);
    }

private:
    struct raw_tag {};
    RatFunc(Poly<F> num, Poly<F> den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        F scale = inverse(den_.lead());
        num_ *= scale;
        den_ *= scale;
    }

    Poly<F> num_;
    Poly<F> den_;
};

}  // namespace valsyz
