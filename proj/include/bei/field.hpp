#pragma once

#include <cstdint>
#include <string>

namespace bei {

// A coefficient: residue (den == 1) for GF(p), reduced fraction for the
// rationals. Zero is {0, 1}.
struct Scalar {
    long long num = 0;
    long long den = 1;
    bool operator==(const Scalar&) const = default;
};

// GF(p) for prime p, or the rationals when p == 0. Rational arithmetic is
// overflow-checked and refuses loudly rather than wrapping.
class Field {
public:
    explicit Field(long long p = 32003);

    long long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    Scalar zero() const { return {0, 1}; }
    Scalar one() const { return {1, 1}; }
    Scalar from_int(long long v) const;
    bool is_zero(const Scalar& a) const { return a.num == 0; }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    // Signed representative for display: (-p/2, p/2] for GF(p).
    long long balanced(const Scalar& a) const;

private:
    long long p_;
};

bool is_prime(long long p);

} // namespace bei
