#include "valsyz/scalar.hpp"

namespace valsyz {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::NotInDomain: return "NotInDomain";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::AllZero: return "AllZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::DegreeExceeded: return "DegreeExceeded";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(const Integer& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

Fp::Fp(std::int64_t v, std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 62))
        throw Error(Errc::NotPrime, "prime field modulus out of range: " + std::to_string(p));
    auto m = static_cast<std::int64_t>(p);
    raw_ = ((v % m) + m) % m;
}

Fp Fp::bind_to(std::uint64_t p) const {
    if (p_ == p || p == 0) return *this;
    if (p_ != 0) throw Error(Errc::NotDivisible, "mixing residues of different prime fields");
    return Fp(raw_, p);
}

std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
        throw Error(Errc::NotDivisible, "mixing residues of different prime fields");
    return a.p_ != 0 ? a.p_ : b.p_;
}

Fp Fp::operator-() const {
    if (p_ == 0) return Fp(static_cast<int>(-raw_));
    Fp r = *this;
    r.raw_ = raw_ == 0 ? 0 : static_cast<std::int64_t>(p_) - raw_;
    return r;
}

Fp& Fp::operator+=(const Fp& o) {
    std::uint64_t p = common_modulus(*this, o);
    if (p == 0) {
        raw_ += o.raw_;
        return *this;
    }
    Fp a = bind_to(p), b = o.bind_to(p);
    std::uint64_t s = static_cast<std::uint64_t>(a.raw_) + static_cast<std::uint64_t>(b.raw_);
    if (s >= p) s -= p;
    raw_ = static_cast<std::int64_t>(s);
    p_ = p;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
    std::uint64_t p = common_modulus(*this, o);
    if (p == 0) {
        raw_ *= o.raw_;
        return *this;
    }
    Fp a = bind_to(p), b = o.bind_to(p);
    raw_ = static_cast<std::int64_t>(
        mulmod(static_cast<std::uint64_t>(a.raw_), static_cast<std::uint64_t>(b.raw_), p));
    p_ = p;
    return *this;
}

Fp& Fp::operator/=(const Fp& o) { return *this *= inverse(o); }

bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = Fp::common_modulus(a, b);
    if (p == 0) return a.raw_ == b.raw_;
    return a.bind_to(p).raw_ == b.bind_to(p).raw_;
}

Fp inverse(const Fp& x) {
    if (is_zero(x)) throw Error(Errc::NotDivisible, "inverse of zero");
    if (x.p_ == 0) {
        if (x.raw_ == 1 || x.raw_ == -1) return x;
        throw Error(Errc::NotDivisible, "inverse of an unbound residue");
    }
    std::uint64_t p = x.p_, base = static_cast<std::uint64_t>(x.raw_), e = p - 2, acc = 1;
    while (e != 0) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return Fp(static_cast<std::int64_t>(acc), p);
}

}  // namespace valsyz
