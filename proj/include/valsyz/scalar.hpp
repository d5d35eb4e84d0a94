#pragma once

// Scalar element types shared by every domain: GMP rationals and prime-field
// residues. The generic algorithms only rely on value construction from small
// integers, the ring operators, `is_zero` and `inverse`.

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "valsyz/error.hpp"

namespace valsyz {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x) {
    if (is_zero(x)) throw Error(Errc::NotDivisible, "inverse of zero");
    Rational r = 1 / x;
    r.canonicalize();
    return r;
}

bool is_prime(const Integer& p);

/// Residue modulo a prime p < 2^62.
///
/// A value built from a plain integer (`Fp(3)`) carries no modulus yet; it
/// adopts the modulus of the first bound operand it meets. This lets generic
/// code write `E(0)` and `E(1)` without knowing the field.
class Fp {
public:
    Fp() = default;
    Fp(int v) : raw_(v) {}  // NOLINT: implicit small-integer literal
    Fp(std::int64_t v, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }
    /// Representative in [0, p) (or the raw integer when unbound).
    std::int64_t value() const { return raw_; }

    Fp operator-() const;
    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b);

    friend bool is_zero(const Fp& x) { return x.raw_ == 0; }
    friend Fp inverse(const Fp& x);
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.raw_; }

private:
    Fp bind_to(std::uint64_t p) const;
    static std::uint64_t common_modulus(const Fp& a, const Fp& b);

    std::int64_t raw_ = 0;
    std::uint64_t p_ = 0;
};

}  // namespace valsyz
