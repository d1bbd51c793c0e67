#include "gbpa/field.hpp"

namespace gbpa {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime_field(long long p) {
    if (!is_prime(p))
        throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
    FieldSpec f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

Scalar FieldSpec::normalize(const Scalar& x) const {
    if (kind_ == FieldKind::Rationals) return x;
    Integer num = numerator(x);
    Integer den = denominator(x);
    Integer p(p_);
    Integer n = num % p;
    if (n < 0) n += p;
    if (den == 1) return Scalar(n);
    // Clear the denominator through a modular inverse.
    Integer d = den % p;
    if (d < 0) d += p;
    FieldSpec f = *this;
    Scalar dinv = f.inv(Scalar(d));
    return normalize(Scalar(n) * dinv);
}

Scalar FieldSpec::inv(const Scalar& a) const {
    if (kind_ == FieldKind::Rationals) {
        if (a == 0) throw Error("division by zero");
        return 1 / a;
    }
    Integer v = numerator(normalize(a));
    if (v == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    // Extended Euclid for v^-1 mod p.
    Integer p(p_);
    Integer old_r = v, r = p, old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r; r = tmp;
        tmp = old_s - q * s;
        old_s = s; s = tmp;
    }
    Integer res = old_s % p;
    if (res < 0) res += p;
    return Scalar(res);
}

std::string FieldSpec::to_string(const Scalar& a) const {
    Scalar v = normalize(a);
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string FieldSpec::name() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    return "GF(" + std::to_string(p_) + ")";
}

} // namespace gbpa
