#ifndef GBPA_FIELD_HPP
#define GBPA_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "gbpa/errors.hpp"

namespace gbpa {

// All scalars are stored as exact rationals. Over GF(p) values are kept
// normalized to integers in [0, p) with denominator 1.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class FieldKind { Rationals, PrimeField };

class FieldSpec {
public:
    FieldSpec() : kind_(FieldKind::Rationals), p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }

    static FieldSpec prime_field(long long p);

    FieldKind kind() const { return kind_; }
    long long characteristic() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    Scalar normalize(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    bool is_zero(const Scalar& a) const { return normalize(a) == 0; }

    std::string to_string(const Scalar& a) const;
    std::string name() const;

private:
    FieldKind kind_;
    long long p_;
};

} // namespace gbpa

#endif
