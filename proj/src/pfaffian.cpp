#include "pfaffian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace voa {

PolyRingPtr pfaffian_ring(long max_index) {
    std::vector<PolyRing::Var> vars;
    for (long a = 0; a <= max_index; ++a)
        for (long b = a + 1; b <= max_index; ++b)
            vars.push_back({"Q_" + std::to_string(a) + "_" + std::to_string(b), 2});
    return PolyRing::make(std::move(vars));
}

namespace {

bool has_repeats(const std::vector<long>& I) {
    std::set<long> s(I.begin(), I.end());
    return s.size() != I.size();
}

// parity of the permutation sorting v ascending (v distinct)
int sort_sign(std::vector<long> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) {
                std::swap(v[i], v[j]);
                sign = -sign;
            }
    return sign;
}

Poly q_var(const PolyRingPtr& ring, long a, long b) {
    auto idx = ring->index_of("Q_" + std::to_string(a) + "_" + std::to_string(b));
    if (!idx) throw std::logic_error("pfaffian ring is missing a variable");
    return Poly::variable(ring, *idx);
}

Poly pf_sorted(const PolyRingPtr& ring, const std::vector<long>& I) {
    if (I.size() == 2) return q_var(ring, I[0], I[1]);
    Poly out(ring);
    for (std::size_t r = 1; r < I.size(); ++r) {
        std::vector<long> rest;
        for (std::size_t t = 1; t < I.size(); ++t)
            if (t != r) rest.push_back(I[t]);
        Poly term = q_var(ring, I[0], I[r]) * pf_sorted(ring, rest);
        out = (r % 2 == 1) ? out + term : out - term;
    }
    return out;
}

}  // namespace

Poly pfaffian(const std::vector<long>& I, const PolyRingPtr& ring_in) {
    if (I.size() < 2 || I.size() % 2 != 0)
        throw std::invalid_argument("pfaffian: list length must be even and >= 2");
    for (long v : I)
        if (v < 0) throw std::invalid_argument("pfaffian: entries must be nonnegative");
    PolyRingPtr ring = ring_in;
    if (!ring) ring = pfaffian_ring(*std::max_element(I.begin(), I.end()));
    if (has_repeats(I)) return Poly(ring);
    int sign = sort_sign(I);
    std::vector<long> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    Poly p = pf_sorted(ring, sorted);
    return sign < 0 ? -p : p;
}

namespace {

// sign of the permutation taking I to the canonical alternating arrangement
// (e0, o0, e1, o1, ...) with evens and odds each ascending
int canonical_sign(const std::vector<long>& I, std::vector<long>& evens, std::vector<long>& odds) {
    for (long v : I) (v % 2 == 0 ? evens : odds).push_back(v);
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());
    std::vector<long> target;
    for (std::size_t k = 0; k < evens.size(); ++k) {
        target.push_back(evens[k]);
        target.push_back(odds[k]);
    }
    // permutation pi with target[t] = I[pi[t]]
    std::vector<std::size_t> pi(I.size());
    for (std::size_t t = 0; t < target.size(); ++t)
        pi[t] = static_cast<std::size_t>(
            std::find(I.begin(), I.end(), target[t]) - I.begin());
    int sign = 1;
    std::vector<bool> seen(pi.size(), false);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = pi[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

Rational rn_closed(const std::vector<long>& I) {
    if (I.size() % 2 != 0 || I.empty())
        throw std::invalid_argument("rn: list length must be even and positive");
    if (has_repeats(I)) return Rational(0);
    std::vector<long> evens, odds;
    int sign = 0;
    {
        std::vector<long> e, o;
        for (long v : I) (v % 2 == 0 ? e : o).push_back(v);
        if (e.size() != o.size()) return Rational(0);
        evens.clear();
        odds.clear();
        sign = canonical_sign(I, evens, odds);
    }
    long n = static_cast<long>(evens.size()) - 1;
    Rational num = factorial(n);
    long total = 0;
    for (std::size_t k = 0; k < evens.size(); ++k) total += evens[k] + odds[k];
    num *= Rational(n + 1 + total);
    for (std::size_t k = 0; k < evens.size(); ++k)
        for (std::size_t l = k + 1; l < evens.size(); ++l)
            num *= Rational(evens[k] - evens[l]) * Rational(odds[k] - odds[l]);
    Rational den(1);
    for (long ik : evens)
        for (long jl : odds) den *= Rational(1 + ik + jl);
    Rational r = num / den;
    return sign < 0 ? Rational(-r) : r;
}

Rational rn_recursion(const std::vector<long>& I) {
    if (I.size() % 2 != 0 || I.empty())
        throw std::invalid_argument("rn: list length must be even and positive");
    if (has_repeats(I)) return Rational(0);
    if (I.size() == 2) {
        bool e0 = I[0] % 2 == 0, e1 = I[1] % 2 == 0;
        if (e0 == e1) return Rational(0);
        return e0 ? Rational(1) : Rational(-1);
    }
    long i0 = I[0];
    Rational total(0);
    for (std::size_t r = 1; r < I.size(); ++r) {
        long ir = I[r];
        std::vector<long> rest;
        for (std::size_t t = 1; t < I.size(); ++t)
            if (t != r) rest.push_back(I[t]);
        Rational inner(0);
        for (std::size_t a = 0; a < rest.size(); ++a) {
            long ia = rest[a];
            std::vector<long> bumped = rest;
            bumped[a] = ia + i0 + ir + 1;
            Rational sub = rn_recursion(bumped);
            if (rat_is_zero(sub)) continue;
            Rational first = sub / Rational(i0 + ia + 1);
            if (i0 % 2 != 0) first = -first;  // (-1)^{i0}
            Rational second = sub / Rational(ir + ia + 1);
            if ((ir + 1) % 2 != 0) second = -second;  // (-1)^{ir+1}
            inner += first + second;
        }
        total += (r % 2 == 1) ? inner : Rational(-inner);  // (-1)^{r+1}
    }
    return Rational(-total / 2);
}

}  // namespace voa
