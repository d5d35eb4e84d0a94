#include "valsyz/valuation.hpp"

namespace valsyz {

PrimeField::PrimeField(const Integer& p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
    if (p >= Integer(1) << 62) throw Error(Errc::NotPrime, "prime field characteristic must be below 2^62");
    p_ = p.get_ui();
}

Fp PrimeField::from_integer(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return Fp(static_cast<std::int64_t>(r.get_ui()), p_);
}

ZpDomain::ZpDomain(const Integer& p) : p_(p) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
}

namespace {

long count_factor(const Integer& z, const Integer& p) {
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

std::optional<long> ZpDomain::valuation(const Rational& x) const {
    if (is_zero(x)) return std::nullopt;
    return count_factor(x.get_num(), p_) - count_factor(x.get_den(), p_);
}

bool ZpDomain::contains(const Rational& x) const {
    return mpz_divisible_p(x.get_den_mpz_t(), p_.get_mpz_t()) == 0;
}

bool ZpDomain::is_unit(const Rational& x) const {
    return !is_zero(x) && contains(x) && mpz_divisible_p(x.get_num_mpz_t(), p_.get_mpz_t()) == 0;
}

DomainSpec DomainSpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::ParseError, "domain must look like zp:<p>, rft0:<q|p> or field:<q|p>, got '" +
                                          std::string(text) + "'");
    std::string_view kind = text.substr(0, colon);
    std::string arg(text.substr(colon + 1));
    DomainSpec spec;
    if (kind == "zp") spec.kind = Kind::Zp;
    else if (kind == "rft0") spec.kind = Kind::RationalFunctionAtZero;
    else if (kind == "field") spec.kind = Kind::TrivialField;
    else throw Error(Errc::ParseError, "unknown domain kind '" + std::string(kind) + "'");

    if (arg == "q" || arg == "Q") {
        if (spec.kind == Kind::Zp) throw Error(Errc::NotPrime, "zp needs a prime, not q");
        spec.p = 0;
        return spec;
    }
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::ParseError, "bad domain parameter '" + arg + "'");
    spec.p = Integer(arg);
    if (!is_prime(spec.p)) throw Error(Errc::NotPrime, arg + " is not prime");
    return spec;
}

std::string DomainSpec::str() const {
    std::string arg = p == 0 ? "q" : p.get_str();
    switch (kind) {
    case Kind::Zp: return "zp:" + arg;
    case Kind::RationalFunctionAtZero: return "rft0:" + arg;
    case Kind::TrivialField: return "field:" + arg;
    }
    return arg;
}

AnyDomain make_domain(const DomainSpec& spec) {
    switch (spec.kind) {
    case DomainSpec::Kind::Zp: return ZpDomain(spec.p);
    case DomainSpec::Kind::RationalFunctionAtZero:
        if (spec.p == 0) return RationalFunctionDomain<RationalField>(RationalField{});
        return RationalFunctionDomain<PrimeField>(PrimeField(spec.p));
    case DomainSpec::Kind::TrivialField:
        if (spec.p == 0) return TrivialFieldDomain<RationalField>(RationalField{});
        return TrivialFieldDomain<PrimeField>(PrimeField(spec.p));
    }
    throw Error(Errc::ParseError, "unknown domain kind");
}

}  // namespace valsyz
