#include <stdexcept>

#include "algebra.hpp"

// Product engine on PBW states. Everything reduces to bracket-table lookups
// through the standard vertex algebra identities:
//   - derivatives peel off the left operand, (d a)_(n) b = -n a_(n-1) b,
//     and off the right through d being a derivation of every product;
//   - n >= 0 against a word uses the non-commutative Wick formula;
//   - a composite left operand against a single factor goes through
//     skew-symmetry, and against a longer word through the Wick formula;
//   - Wick products insert factors into PBW words, swapping out-of-order
//     factors with the commutator-formula correction terms;
//   - quasi-associativity renormalizes nested Wick products;
//   - a_(-k-1) b = (1/k!) :(d^k a) b: supplies the remaining negative modes.

namespace voa {

namespace {

inline int koszul(int p1, int p2) { return (p1 & p2 & 1) ? -1 : 1; }

inline Word word_tail(const Word& w) { return Word(w.begin() + 1, w.end()); }

}  // namespace

State Algebra::prod_state_word(const State& x, long n, const Word& w) const {
    State out = zero();
    for (const auto& [m, c] : x.terms()) out += prod_words(m, n, w) * c;
    return out;
}

State Algebra::wick_factor_state(Factor f, const State& x) const {
    State out = zero();
    for (const auto& [m, c] : x.terms()) out += wick_insert(f, m) * c;
    return out;
}

State Algebra::derivative_word(const Word& w) const {
    State out = zero();
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word bumped = w;
        bumped[i].dz += 1;
        if (is_pbw(bumped))
            out.add_term(bumped, Scalar(1));
        else
            out += normalize_sequence(bumped);
    }
    return out;
}

State Algebra::normalize_sequence(const std::vector<Factor>& seq) const {
    State acc = vacuum();
    for (std::size_t i = seq.size(); i-- > 0;) acc = wick_factor_state(seq[i], acc);
    return acc;
}

State derivative(const State& a, long times) {
    State cur = a;
    for (long t = 0; t < times; ++t) {
        const Algebra& alg = *cur.algebra();
        State next = alg.zero();
        for (const auto& [w, c] : cur.terms()) next += alg.derivative_word(w) * c;
        cur = std::move(next);
    }
    return cur;
}

State Algebra::wick_insert(Factor f, const Word& w) const {
    if (w.empty()) return make(Word{f});
    Factor c = w[0];
    bool odd = generator(f.gen).parity == Parity::odd;
    bool ok = f.gen < c.gen ||
              (f.gen == c.gen && (f.dz > c.dz || (f.dz == c.dz && !odd)));
    if (ok) {
        Word out;
        out.reserve(w.size() + 1);
        out.push_back(f);
        out.insert(out.end(), w.begin(), w.end());
        return make(out);
    }
    Word d = word_tail(w);
    Weight2 wf = generator(f.gen).weight2 + 2 * f.dz;
    Weight2 wc = generator(c.gen).weight2 + 2 * c.dz;
    if (f == c) {
        // f odd with equal head: f_(-1)(f_(-1)d) = 1/2 sum_i (-1)^i (f_(i)f)_(-2-i) d
        State r = zero();
        for (long i = 0; wf + wc - 2 * (i + 1) >= 0; ++i) {
            State y = prod_words(Word{f}, i, Word{c});
            if (y.is_zero()) continue;
            r += prod_state_word(y, -2 - i, d) * Scalar(Rational((i % 2) ? -1 : 1, 2));
        }
        return r;
    }
    // move f past c: f_(-1)(c_(-1)d) = +-c_(-1)(f_(-1)d) + sum_i (-1)^i (f_(i)c)_(-2-i) d
    int pf = static_cast<int>(generator(f.gen).parity);
    int pc = static_cast<int>(generator(c.gen).parity);
    State r = wick_factor_state(c, wick_insert(f, d)) * Scalar(Rational(koszul(pf, pc)));
    for (long i = 0; wf + wc - 2 * (i + 1) >= 0; ++i) {
        State y = prod_words(Word{f}, i, Word{c});
        if (y.is_zero()) continue;
        r += prod_state_word(y, -2 - i, d) * Scalar(Rational((i % 2) ? -1 : 1));
    }
    return r;
}

State Algebra::single_pos_single(Factor f, long n, Factor h) const {
    // memoized: every product of generator-derivative pairs lands here
    std::tuple<int, int, long, int, int> key{f.gen, f.dz, n, h.gen, h.dz};
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    State r = zero();
    if (f.dz > 0) {
        Rational c(1);
        for (int t = 0; t < f.dz; ++t) c *= Rational(-(n - t));
        if (!rat_is_zero(c))
            r = prod_words(Word{Factor{f.gen, 0}}, n - f.dz, Word{h}) * Scalar(c);
    } else if (h.dz > 0) {
        // g_(n)(d b) = d(g_(n) b) + n g_(n-1) b
        Factor hb{h.gen, h.dz - 1};
        State inner = prod_words(Word{f}, n, Word{hb});
        State out = zero();
        for (const auto& [w, c] : inner.terms()) out += derivative_word(w) * c;
        if (n != 0) out += prod_words(Word{f}, n - 1, Word{hb}) * Scalar(Rational(n));
        r = out;
    } else {
        r = bracket_state(f.gen, n, h.gen);
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto [it, fresh] = memo_.emplace(key, r);
    return it->second;
}

State Algebra::prod_words(const Word& m, long n, const Word& w) const {
    if (weight2(m) + weight2(w) - 2 * (n + 1) < 0) return zero();
    if (m.empty()) return n == -1 ? make(w) : zero();
    if (w.empty()) {
        if (n >= 0) return zero();
        long k = -n - 1;
        State s = derivative(make(m), k);
        return s * Scalar(1 / factorial(k));
    }
    if (n >= 0) {
        if (m.size() == 1 && w.size() == 1) return single_pos_single(m[0], n, w[0]);
        if (w.size() == 1) {
            // skew-symmetry: m_(n) f = +- sum_j (-1)^{n+j+1} (1/j!) d^j (f_(n+j) m)
            int sgn = koszul(parity(m), parity(w));
            Weight2 tot = weight2(m) + weight2(w);
            State r = zero();
            for (long j = 0; tot - 2 * (n + j + 1) >= 0; ++j) {
                State inner = prod_words(w, n + j, m);
                if (inner.is_zero()) continue;
                Rational c = Rational(((n + j + 1) % 2 == 0) ? 1 : -1) * sgn / factorial(j);
                r += derivative(inner, j) * Scalar(c);
            }
            return r;
        }
        // non-commutative Wick formula against w = :b c:
        Factor b = w[0];
        Word c = word_tail(w);
        State r = zero();
        {
            State mb = prod_words(m, n, Word{b});
            for (const auto& [mw, mc] : mb.terms()) r += prod_words(mw, -1, c) * mc;
        }
        int sgn = koszul(parity(m), static_cast<int>(generator(b.gen).parity));
        r += wick_factor_state(b, prod_words(m, n, c)) * Scalar(Rational(sgn));
        for (long i = 1; i <= n; ++i) {
            State y = prod_words(m, n - i, Word{b});
            if (y.is_zero()) continue;
            r += prod_state_word(y, i - 1, c) * Scalar(binomial(n, i));
        }
        return r;
    }
    if (n == -1) {
        if (m.size() == 1) return wick_insert(m[0], w);
        // quasi-associativity for m = :c d:
        Factor c = m[0];
        Word d = word_tail(m);
        State r = wick_factor_state(c, prod_words(d, -1, w));
        Weight2 wc = generator(c.gen).weight2 + 2 * c.dz;
        Weight2 wd = weight2(d);
        Weight2 ww = weight2(w);
        for (long i = 0; wd + ww - 2 * (i + 1) >= 0; ++i) {
            State din = prod_words(d, i, w);
            if (din.is_zero()) continue;
            Factor cd{c.gen, c.dz + static_cast<int>(i) + 1};
            r += wick_factor_state(cd, din) * Scalar(1 / factorial(i + 1));
        }
        int sgn = koszul(static_cast<int>(generator(c.gen).parity), parity(d));
        for (long i = 0; wc + ww - 2 * (i + 1) >= 0; ++i) {
            State cin = prod_words(Word{c}, i, w);
            if (cin.is_zero()) continue;
            State dd = derivative(make(d), i + 1);
            State term = zero();
            for (const auto& [w1, c1] : dd.terms())
                for (const auto& [w2, c2] : cin.terms()) term += prod_words(w1, -1, w2) * (c1 * c2);
            r += term * Scalar(Rational(sgn) / factorial(i + 1));
        }
        return r;
    }
    // n <= -2
    long k = -n - 1;
    if (m.size() == 1)
        return wick_insert(Factor{m[0].gen, m[0].dz + static_cast<int>(k)}, w) *
               Scalar(1 / factorial(k));
    State dm = derivative(make(m), k);
    State r = zero();
    for (const auto& [w1, c1] : dm.terms()) r += prod_words(w1, -1, w) * c1;
    return r * Scalar(1 / factorial(k));
}

State Algebra::prod_states(const State& a, long n, const State& b) const {
    State out = zero();
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out += prod_words(wa, n, wb) * (ca * cb);
    return out;
}

State Algebra::prod_via_skew(const State& a, long n, const State& b) const {
    auto pa = a.parity();
    auto pb = b.parity();
    if (!pa || !pb) throw std::invalid_argument("skew route needs parity-homogeneous states");
    Weight2 wa = 0, wb = 0;
    for (const auto& [w, c] : a.terms()) wa = std::max(wa, weight2(w));
    for (const auto& [w, c] : b.terms()) wb = std::max(wb, weight2(w));
    int sgn = koszul(*pa, *pb);
    State r = zero();
    for (long j = 0; wa + wb - 2 * (n + j + 1) >= 0; ++j) {
        State inner = prod_states(b, n + j, a);
        if (inner.is_zero()) continue;
        Rational c = Rational(((n + j + 1) % 2 == 0) ? 1 : -1) * sgn / factorial(j);
        r += derivative(inner, j) * Scalar(c);
    }
    return r;
}

namespace {

const Algebra& common_algebra(const State& a, const State& b) {
    if (!a.algebra() || !b.algebra() || a.algebra().get() != b.algebra().get())
        throw std::invalid_argument("mixed-algebra operands");
    return *a.algebra();
}

}  // namespace

State nth_product(const State& a, long n, const State& b) {
    return common_algebra(a, b).prod_states(a, n, b);
}

State wick(const State& a, const State& b) { return nth_product(a, -1, b); }

State iterated_wick(const std::vector<State>& xs) {
    if (xs.empty()) throw std::invalid_argument("empty Wick product");
    State acc = xs.back();
    for (std::size_t i = xs.size() - 1; i-- > 0;) acc = wick(xs[i], acc);
    return acc;
}

}  // namespace voa
