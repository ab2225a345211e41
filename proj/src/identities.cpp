#include "identities.hpp"

#include <stdexcept>

namespace voa {

namespace {

int required_parity(const State& s, const char* label) {
    auto p = s.parity();
    if (!p) throw std::invalid_argument(std::string(label) + ": state is not parity-homogeneous");
    return *p;
}

std::string witness_str(const std::string& indices, const State& diff) {
    return indices + ": difference = " + diff.str();
}

}  // namespace

IdentityReport check_identities(const State& a, const State& b, const State& c, long nmax) {
    const AlgebraPtr& alg = a.algebra();
    int pa = required_parity(a, "a");
    int pb = required_parity(b, "b");
    Scalar sab(Rational((pa & pb) ? -1 : 1));

    IdentityReport rep;
    rep.checks.resize(5);
    rep.checks[0].name = "translation";
    rep.checks[1].name = "skew-symmetry";
    rep.checks[2].name = "quasi-associativity";
    rep.checks[3].name = "wick-formula";
    rep.checks[4].name = "commutator";

    State da = derivative(a);
    for (long n = -nmax; n <= nmax && rep.checks[0].pass; ++n) {
        State lhs = nth_product(da, n, b);
        State rhs = nth_product(a, n - 1, b) * Scalar(Rational(-n));
        if (!(lhs == rhs)) {
            rep.checks[0].pass = false;
            rep.checks[0].witness = witness_str("n=" + std::to_string(n), lhs - rhs);
        }
    }

    for (long n = -nmax; n <= nmax && rep.checks[1].pass; ++n) {
        State lhs = nth_product(a, n, b);
        State rhs = alg->prod_via_skew(a, n, b);
        if (!(lhs == rhs)) {
            rep.checks[1].pass = false;
            rep.checks[1].witness = witness_str("n=" + std::to_string(n), lhs - rhs);
        }
    }

    {
        State lhs = wick(wick(a, b), c) - wick(a, wick(b, c));
        State rhs = alg->zero();
        auto wa = a.weight2().value_or(0);
        auto wb = b.weight2().value_or(0);
        auto wc = c.weight2().value_or(0);
        for (long n = 0; wb + wc - 2 * (n + 1) >= 0 || wa + wc - 2 * (n + 1) >= 0; ++n) {
            Scalar inv(1 / factorial(n + 1));
            State t1 = nth_product(b, n, c);
            if (!t1.is_zero()) rhs += wick(derivative(a, n + 1), t1) * inv;
            State t2 = nth_product(a, n, c);
            if (!t2.is_zero()) rhs += wick(derivative(b, n + 1), t2) * (inv * sab);
        }
        if (!(lhs == rhs)) {
            rep.checks[2].pass = false;
            rep.checks[2].witness = witness_str("(wick nesting)", lhs - rhs);
        }
    }

    for (long n = 0; n <= nmax && rep.checks[3].pass; ++n) {
        State lhs = nth_product(a, n, wick(b, c)) - wick(nth_product(a, n, b), c) -
                    wick(b, nth_product(a, n, c)) * sab;
        State rhs = alg->zero();
        for (long i = 1; i <= n; ++i)
            rhs += nth_product(nth_product(a, n - i, b), i - 1, c) * Scalar(binomial(n, i));
        if (!(lhs == rhs)) {
            rep.checks[3].pass = false;
            rep.checks[3].witness = witness_str("n=" + std::to_string(n), lhs - rhs);
        }
    }

    for (long r = 0; r <= nmax && rep.checks[4].pass; ++r)
        for (long s = 0; s <= nmax && rep.checks[4].pass; ++s) {
            State lhs = nth_product(a, r, nth_product(b, s, c));
            State rhs = nth_product(b, s, nth_product(a, r, c)) * sab;
            for (long i = 0; i <= r; ++i)
                rhs += nth_product(nth_product(a, i, b), r + s - i, c) * Scalar(binomial(r, i));
            if (!(lhs == rhs)) {
                rep.checks[4].pass = false;
                rep.checks[4].witness =
                    witness_str("(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")",
                                lhs - rhs);
            }
        }

    return rep;
}

}  // namespace voa
