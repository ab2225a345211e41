#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace voa {

// Arbitrary-precision rational scalar. GMP keeps values reduced with a
// positive denominator, so structural equality is mathematical equality.
using Rational = mpq_class;

Rational rat_parse(const std::string& text);
std::string rat_str(const Rational& q);

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

// mpq_class(n, d) does not reduce; this does.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Combined numerator/denominator bit length, used as a pivot-size heuristic
// in exact row reduction.
std::size_t rat_bits(const Rational& q);

Rational rat_pow(const Rational& q, long e);

// n! as a rational (engine correction terms divide by factorials).
Rational factorial(long n);

// Binomial C(n, k) for any integer n and k >= 0.
Rational binomial(long n, long k);

}  // namespace voa
