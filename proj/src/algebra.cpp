#include "algebra.hpp"

#include <functional>
#include <stdexcept>

namespace voa {

void LieConformalSpec::set_bracket(int a, int b, long j, BracketRhs rhs) {
    if (rhs.is_zero()) return;
    brackets[{a, b, j}] = std::move(rhs);
}

std::optional<int> Algebra::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < spec_.generators.size(); ++i)
        if (spec_.generators[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

Weight2 Algebra::weight2(const Word& w) const {
    Weight2 t = 0;
    for (const auto& f : w) t += generator(f.gen).weight2 + 2 * f.dz;
    return t;
}

int Algebra::parity(const Word& w) const {
    int p = 0;
    for (const auto& f : w) p ^= static_cast<int>(generator(f.gen).parity);
    return p;
}

bool Algebra::is_pbw(const Word& w) const {
    for (const auto& f : w) {
        if (f.gen < 0 || f.gen >= static_cast<int>(num_generators()) || f.dz < 0) return false;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Factor &a = w[i], &b = w[i + 1];
        if (a.gen < b.gen) continue;
        if (a.gen > b.gen) return false;
        if (a.dz < b.dz) return false;
        if (a.dz == b.dz && generator(a.gen).parity == Parity::odd) return false;
    }
    return true;
}

State Algebra::gen_state(int g, int dz) const { return make(Word{Factor{g, dz}}); }

State Algebra::make(const Word& w, Scalar c) const {
    return State(shared_from_this(), w, std::move(c));
}

const BracketRhs* Algebra::bracket(int a, int b, long j) const {
    auto it = spec_.brackets.find({a, b, j});
    return it == spec_.brackets.end() ? nullptr : &it->second;
}

State Algebra::bracket_state(int a, long j, int b) const {
    State s = zero();
    const BracketRhs* rhs = bracket(a, b, j);
    if (!rhs) return s;
    for (const auto& t : rhs->terms) s.add_term(Word{Factor{t.gen, t.dz}}, t.coeff);
    s.add_term(Word{}, rhs->central);
    return s;
}

AlgebraPtr Algebra::build(LieConformalSpec spec, BuiltinInfo info) {
    auto p = std::shared_ptr<Algebra>(new Algebra(std::move(spec), std::move(info)));
    p->complete_and_validate();
    p->validate_jacobi();
    return p;
}

namespace {

// Skew-symmetry on the bracket table:
//   b_(j) a = (-1)^{|a||b|} sum_{i>=0} (-1)^{j+i+1} (1/i!) d^i ( a_(j+i) b ).
BracketRhs skew_rhs(int pa, int pb, long j, long jmax,
                    const std::function<const BracketRhs*(long)>& entry) {
    BracketRhs out;
    std::map<std::pair<int, int>, Scalar> acc;
    Scalar central(0);
    int outer = (pa & pb) ? -1 : 1;
    for (long i = 0; j + i <= jmax; ++i) {
        const BracketRhs* rhs = entry(j + i);
        if (!rhs) continue;
        Rational f = Rational(((j + i + 1) % 2 == 0) ? 1 : -1) * outer / factorial(i);
        for (const auto& t : rhs->terms) {
            auto key = std::make_pair(t.gen, t.dz + static_cast<int>(i));
            auto [it, fresh] = acc.emplace(key, t.coeff * Scalar(f));
            if (!fresh) it->second += t.coeff * Scalar(f);
        }
        if (i == 0) central += rhs->central * Scalar(f);
    }
    for (auto& [key, c] : acc)
        if (!c.is_zero()) out.terms.push_back({key.first, key.second, c});
    out.central = central;
    return out;
}

bool rhs_equal(const BracketRhs& x, const BracketRhs& y) {
    std::map<std::pair<int, int>, Scalar> a, b;
    for (const auto& t : x.terms) a[{t.gen, t.dz}] += t.coeff;
    for (const auto& t : y.terms) b[{t.gen, t.dz}] += t.coeff;
    for (const auto& [k, c] : b) a[k] -= c;
    for (const auto& [k, c] : a)
        if (!c.is_zero()) return false;
    return x.central == y.central;
}

}  // namespace

void Algebra::complete_and_validate() {
    const auto G = static_cast<int>(spec_.generators.size());
    std::map<std::string, int> names;
    for (int g = 0; g < G; ++g) {
        const auto& d = spec_.generators[(std::size_t)g];
        if (d.weight2 <= 0) throw std::invalid_argument("generator weight must be positive");
        if (!names.emplace(d.name, g).second)
            throw std::invalid_argument("duplicate generator name: " + d.name);
    }
    // weight homogeneity and the locality bound
    for (const auto& [key, rhs] : spec_.brackets) {
        auto [a, b, j] = key;
        if (a < 0 || a >= G || b < 0 || b >= G || j < 0)
            throw std::invalid_argument("bracket key out of range");
        Weight2 rw = generator(a).weight2 + generator(b).weight2 - 2 * j - 2;
        if (rw < 0 && !rhs.is_zero())
            throw std::invalid_argument("bracket violates the locality/weight bound");
        for (const auto& t : rhs.terms) {
            if (t.gen < 0 || t.gen >= G || t.dz < 0)
                throw std::invalid_argument("bracket term out of range");
            if (generator(t.gen).weight2 + 2 * t.dz != rw)
                throw std::invalid_argument("bracket term has wrong weight");
        }
        if (!rhs.central.is_zero() && rw != 0)
            throw std::invalid_argument("central bracket term has wrong weight");
    }
    // complete the table by skew-symmetry, cross-checking stored entries
    for (int a = 0; a < G; ++a) {
        for (int b = a; b < G; ++b) {
            Weight2 ws = generator(a).weight2 + generator(b).weight2;
            long jmax = ws / 2 - 1;
            if (jmax < 0) continue;
            bool has_ab = false, has_ba = false;
            for (long j = 0; j <= jmax; ++j) {
                if (bracket(a, b, j)) has_ab = true;
                if (bracket(b, a, j)) has_ba = true;
            }
            int pa = static_cast<int>(generator(a).parity);
            int pb = static_cast<int>(generator(b).parity);
            if (a == b) {
                for (long j = 0; j <= jmax; ++j) {
                    BracketRhs implied = skew_rhs(pa, pb, j, jmax,
                                                  [&](long i) { return bracket(a, a, i); });
                    const BracketRhs* stored = bracket(a, a, j);
                    BracketRhs zero;
                    if (!rhs_equal(stored ? *stored : zero, implied))
                        throw std::invalid_argument("inconsistent bracket table: " +
                                                    generator(a).name + " with itself at j=" +
                                                    std::to_string(j));
                }
                continue;
            }
            // derive b_(j) a from a_(*) b (or vice versa), then cross-check
            int src_a = has_ab ? a : b, src_b = has_ab ? b : a;
            if (!has_ab && !has_ba) continue;
            for (long j = 0; j <= jmax; ++j) {
                BracketRhs implied = skew_rhs(pa, pb, j, jmax,
                                              [&](long i) { return bracket(src_a, src_b, i); });
                const BracketRhs* stored = bracket(src_b, src_a, j);
                if (stored) {
                    if (!rhs_equal(*stored, implied))
                        throw std::invalid_argument(
                            "inconsistent bracket table: skew-symmetry fails for " +
                            generator(src_b).name + "_(" + std::to_string(j) + ") " +
                            generator(src_a).name);
                } else if (!implied.is_zero()) {
                    spec_.brackets[{src_b, src_a, j}] = implied;
                }
            }
        }
    }
}

void Algebra::validate_jacobi() const {
    const auto G = static_cast<int>(spec_.generators.size());
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b)
            for (int c = 0; c < G; ++c) {
                long rmax = (generator(a).weight2 + generator(b).weight2) / 2;
                long smax = (generator(b).weight2 + generator(c).weight2) / 2;
                int sgn = (static_cast<int>(generator(a).parity) &
                           static_cast<int>(generator(b).parity))
                              ? -1
                              : 1;
                for (long r = 0; r <= rmax; ++r)
                    for (long s = 0; s <= smax; ++s) {
                        State lhs = zero();
                        {
                            State bc = bracket_state(b, s, c);
                            for (const auto& [w, coef] : bc.terms())
                                lhs += prod_words(Word{Factor{a, 0}}, r, w) * coef;
                        }
                        State rhs = zero();
                        {
                            State ac = bracket_state(a, r, c);
                            for (const auto& [w, coef] : ac.terms())
                                rhs += prod_words(Word{Factor{b, 0}}, s, w) * coef;
                            rhs = rhs * Scalar(Rational(sgn));
                        }
                        for (long i = 0; i <= r; ++i) {
                            State ab = bracket_state(a, i, b);
                            Scalar bin(binomial(r, i));
                            for (const auto& [w, coef] : ab.terms())
                                rhs += prod_words(w, r + s - i, Word{Factor{c, 0}}) * (coef * bin);
                        }
                        if (!(lhs == rhs))
                            throw std::invalid_argument(
                                "not a Lie conformal algebra: Jacobi fails on (" +
                                generator(a).name + "," + generator(b).name + "," +
                                generator(c).name + ") at (r,s)=(" + std::to_string(r) + "," +
                                std::to_string(s) + ")");
                    }
            }
}

namespace {

void enum_gen(const Algebra& alg, int g, Weight2 rem, Word& cur, std::vector<Word>& out);

void enum_dz(const Algebra& alg, int g, Weight2 rem, long maxdz, Word& cur,
             std::vector<Word>& out) {
    enum_gen(alg, g + 1, rem, cur, out);
    if (maxdz < 0) return;
    Weight2 wg = alg.generator(g).weight2;
    bool odd = alg.generator(g).parity == Parity::odd;
    long top = (rem - wg) / 2;
    if (top > maxdz) top = maxdz;
    for (long k = top; k >= 0; --k) {
        cur.push_back(Factor{g, static_cast<int>(k)});
        enum_dz(alg, g, rem - wg - 2 * k, odd ? k - 1 : k, cur, out);
        cur.pop_back();
    }
}

void enum_gen(const Algebra& alg, int g, Weight2 rem, Word& cur, std::vector<Word>& out) {
    if (g == static_cast<int>(alg.num_generators())) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    enum_dz(alg, g, rem, rem, cur, out);
}

}  // namespace

std::vector<Word> Algebra::basis_words(Weight2 w2) const {
    std::vector<Word> out;
    if (w2 < 0) return out;
    Word cur;
    enum_gen(*this, 0, w2, cur, out);
    return out;
}

GramResult shapovalov_gram(const AlgebraPtr& h, Weight2 w2) {
    GramResult r;
    r.basis = h->basis_words(w2);
    std::size_t n = r.basis.size();
    long mode = w2 - 1;
    r.gram.assign(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.gram[i][j] = h->prod_words(r.basis[i], mode, r.basis[j]).vacuum_coeff();
    // determinant by exact elimination
    auto a = r.gram;
    Scalar det(1);
    for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
        std::size_t sel = n;
        for (std::size_t i = row; i < n; ++i)
            if (!a[i][col].is_zero()) {
                if (sel == n || a[i][col].size_hint() < a[sel][col].size_hint()) sel = i;
            }
        if (sel == n) {
            det = Scalar(0);
            break;
        }
        if (sel != row) {
            std::swap(a[sel], a[row]);
            det = -det;
        }
        det = det * a[row][col];
        Scalar inv = a[row][col].inverse();
        for (std::size_t i = row + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Scalar f = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
    }
    if (n == 0) det = Scalar(1);
    r.det = det;
    return r;
}

}  // namespace voa
