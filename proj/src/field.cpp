#include "bei/field.hpp"

#include <numeric>
#include <stdexcept>

namespace bei {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field::Field(long long p) : p_(p) {
    if (p != 0 && !is_prime(p))
        throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

namespace {

long long checked_mul(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX / 2 || r < INT64_MIN / 2)
        throw std::overflow_error("rational coefficient overflow");
    return static_cast<long long>(r);
}

long long checked_add(long long a, long long b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX / 2 || r < INT64_MIN / 2)
        throw std::overflow_error("rational coefficient overflow");
    return static_cast<long long>(r);
}

Scalar reduce_fraction(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (num == 0) return {0, 1};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

} // namespace

Scalar Field::from_int(long long v) const {
    if (p_ == 0) return {v, 1};
    long long r = v % p_;
    if (r < 0) r += p_;
    return {r, 1};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (p_ == 0)
        return reduce_fraction(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                               checked_mul(a.den, b.den));
    long long r = (a.num + b.num) % p_;
    return {r, 1};
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ == 0) return {-a.num, a.den};
    return {a.num == 0 ? 0 : p_ - a.num, 1};
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (p_ == 0)
        return reduce_fraction(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    return {(a.num * b.num) % p_, 1};
}

Scalar Field::inv(const Scalar& a) const {
    if (a.num == 0) throw std::invalid_argument("field: division by zero");
    if (p_ == 0) return reduce_fraction(a.den, a.num);
    // extended Euclid
    long long t = 0, newt = 1, r = p_, newr = a.num;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p_;
    return {t, 1};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

long long Field::balanced(const Scalar& a) const {
    if (p_ == 0) return a.num;
    return a.num > p_ / 2 ? a.num - p_ : a.num;
}

} // namespace bei
