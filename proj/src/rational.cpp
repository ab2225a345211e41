#include "rational.hpp"

#include <stdexcept>

namespace voa {

Rational rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string rat_str(const Rational& q) { return q.get_str(); }

std::size_t rat_bits(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long n = inv ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
    r.canonicalize();
    if (inv) {
        if (rat_is_zero(r)) throw std::domain_error("zero divisor");
        r = 1 / r;
    }
    return r;
}

Rational factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    // C(n,k) = n(n-1)...(n-k+1)/k!, valid for negative n as well.
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= Rational(n - i);
    return num / factorial(k);
}

}  // namespace voa
