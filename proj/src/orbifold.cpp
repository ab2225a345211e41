#include "orbifold.hpp"

#include <algorithm>
#include <stdexcept>

#include "linalg.hpp"
#include "standard.hpp"

namespace voa {

namespace {

long mod(long a, long d) {
    long r = a % d;
    return r < 0 ? r + d : r;
}

}  // namespace

long word_charge(const AlgebraPtr& h, const DiagonalAction& act, const Word& w) {
    long c = 0;
    for (const auto& f : w) c += act.charge[(std::size_t)f.gen];
    return mod(c, act.modulus);
}

void validate_action(const AlgebraPtr& h, const DiagonalAction& act) {
    if (act.modulus < 2) throw std::invalid_argument("action modulus must be >= 2");
    if (act.charge.size() != h->num_generators())
        throw std::invalid_argument("action charge table has wrong size");
    for (const auto& [key, rhs] : h->spec().brackets) {
        auto [a, b, j] = key;
        long lhs = act.charge[(std::size_t)a] + act.charge[(std::size_t)b];
        for (const auto& t : rhs.terms)
            if (mod(lhs - act.charge[(std::size_t)t.gen], act.modulus) != 0)
                throw std::invalid_argument("action does not preserve bracket " +
                                            h->generator(a).name + "_(" + std::to_string(j) +
                                            ") " + h->generator(b).name);
        if (!rhs.central.is_zero() && mod(lhs, act.modulus) != 0)
            throw std::invalid_argument("action does not preserve the central bracket of " +
                                        h->generator(a).name + ", " + h->generator(b).name);
    }
}

std::vector<Word> invariant_basis(const AlgebraPtr& h, const DiagonalAction& act, Weight2 w2) {
    validate_action(h, act);
    std::vector<Word> out;
    for (auto& w : h->basis_words(w2))
        if (word_charge(h, act, w) == 0) out.push_back(std::move(w));
    return out;
}

State apply_derivation(const AlgebraPtr& h, const std::vector<std::vector<Rational>>& m,
                       const State& s) {
    State out = h->zero();
    const int G = static_cast<int>(h->num_generators());
    for (const auto& [w, c] : s.terms()) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            int g = w[pos].gen;
            for (int target = 0; target < G; ++target) {
                const Rational& coeff = m[(std::size_t)target][(std::size_t)g];
                if (rat_is_zero(coeff)) continue;
                Word repl = w;
                repl[pos].gen = target;
                if (h->is_pbw(repl))
                    out.add_term(repl, c * Scalar(coeff));
                else
                    out += h->normalize_sequence(repl) * (c * Scalar(coeff));
            }
        }
    }
    return out;
}

void validate_linear_action(const AlgebraPtr& h, const LinearAction& act) {
    const int G = static_cast<int>(h->num_generators());
    for (const auto& d : act.diagonal) validate_action(h, d);
    for (const auto& m : act.lie) {
        if (m.size() != (std::size_t)G)
            throw std::invalid_argument("derivation matrix has wrong size");
        for (int a = 0; a < G; ++a)
            for (int b = 0; b < G; ++b) {
                long jmax = (h->generator(a).weight2 + h->generator(b).weight2) / 2;
                for (long j = 0; j <= jmax; ++j) {
                    State ab = nth_product(h->gen_state(a), j, h->gen_state(b));
                    State lhs = apply_derivation(h, m, ab);
                    State rhs = h->zero();
                    for (int t = 0; t < G; ++t) {
                        if (!rat_is_zero(m[(std::size_t)t][(std::size_t)a]))
                            rhs += nth_product(h->gen_state(t), j, h->gen_state(b)) *
                                   Scalar(m[(std::size_t)t][(std::size_t)a]);
                        if (!rat_is_zero(m[(std::size_t)t][(std::size_t)b]))
                            rhs += nth_product(h->gen_state(a), j, h->gen_state(t)) *
                                   Scalar(m[(std::size_t)t][(std::size_t)b]);
                    }
                    if (!(lhs == rhs))
                        throw std::invalid_argument(
                            "matrix is not a derivation of the bracket table");
                }
            }
    }
}

std::vector<State> invariant_states(const AlgebraPtr& h, const LinearAction& act, Weight2 w2) {
    std::vector<Word> words = h->basis_words(w2);
    // finite diagonal components cut the word basis first
    for (const auto& d : act.diagonal) {
        std::vector<Word> kept;
        for (auto& w : words)
            if (word_charge(h, d, w) == 0) kept.push_back(std::move(w));
        words = std::move(kept);
    }
    if (act.lie.empty() || words.empty()) {
        std::vector<State> out;
        for (const auto& w : words) out.push_back(h->make(w));
        return out;
    }
    // kernel of the stacked derivation matrices on the remaining span
    std::vector<Word> full = h->basis_words(w2);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < full.size(); ++i) index[full[i]] = i;
    Mat rows;
    std::size_t m = words.size();
    for (const auto& op : act.lie) {
        std::vector<Vec> images;
        for (const auto& w : words) {
            State img = apply_derivation(h, op, h->make(w));
            Vec v(full.size(), Scalar(0));
            for (const auto& [iw, c] : img.terms()) v[index.at(iw)] = c;
            images.push_back(std::move(v));
        }
        for (std::size_t r = 0; r < full.size(); ++r) {
            Vec row(m, Scalar(0));
            bool nonzero = false;
            for (std::size_t cidx = 0; cidx < m; ++cidx) {
                row[cidx] = images[cidx][r];
                nonzero = nonzero || !row[cidx].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    std::vector<State> out;
    for (const auto& coeffs : nullspace(rows, m)) {
        State s = h->zero();
        for (std::size_t i = 0; i < m; ++i)
            if (!coeffs[i].is_zero()) s += h->make(words[i]) * coeffs[i];
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<FamilyTag> family_tag_from_string(const std::string& s) {
    if (s == "sev-sp") return FamilyTag::SevSp;
    if (s == "oodd-o") return FamilyTag::OoddO;
    if (s == "sodd-sp") return FamilyTag::SoddSp;
    if (s == "oev-o") return FamilyTag::OevO;
    if (s == "sev-gl") return FamilyTag::SevGL;
    if (s == "oev-gl") return FamilyTag::OevGL;
    if (s == "sodd-gl") return FamilyTag::SoddGL;
    if (s == "oodd-gl") return FamilyTag::OoddGL;
    return std::nullopt;
}

AlgebraPtr family_algebra(const QuadraticFamily& fam) {
    switch (fam.tag) {
        case FamilyTag::SevSp:
        case FamilyTag::SevGL:
            return s_ev(fam.n, fam.k);
        case FamilyTag::SoddSp:
        case FamilyTag::SoddGL:
            return s_odd(fam.n, fam.k);
        case FamilyTag::OoddO:
            return o_odd(fam.n, fam.k);
        case FamilyTag::OevO:
            return o_ev(fam.n, fam.k);
        case FamilyTag::OevGL:
            return o_ev_pairs(fam.n, fam.k);
        case FamilyTag::OoddGL:
            return o_odd_pairs(fam.n, fam.k);
    }
    throw std::invalid_argument("unknown family tag");
}

namespace {

void check_family_handle(const QuadraticFamily& fam, const AlgebraPtr& h, bool paired) {
    std::size_t expect = paired ? 2 * (std::size_t)fam.n : (std::size_t)fam.n;
    if (h->num_generators() != expect)
        throw std::invalid_argument("family/handle mismatch: wrong generator count");
    for (std::size_t g = 0; g < h->num_generators(); ++g)
        if (h->generator((int)g).weight2 != fam.k)
            throw std::invalid_argument("family/handle mismatch: wrong generator weight");
}

}  // namespace

std::vector<State> omega_generators(const QuadraticFamily& fam, const AlgebraPtr& h) {
    const int n = fam.n, k = fam.k;
    std::vector<State> out;
    auto pair_sum = [&](int j, const Rational& scale, int second_sign) {
        // scale * sum_i ( :a_i d^j b_i: + second_sign :(d^j a_i) b_i: )
        State s = h->zero();
        for (int i = 0; i < n; ++i) {
            s += wick(h->gen_state(i, 0), h->gen_state(n + i, j));
            s += wick(h->gen_state(i, j), h->gen_state(n + i, 0)) * Scalar(Rational(second_sign));
        }
        return s * Scalar(scale);
    };
    switch (fam.tag) {
        case FamilyTag::SevSp: {
            check_family_handle(fam, h, true);
            for (int j = 1; j <= 2 * n * n + 3 * n - 1 + n * k; j += 2)
                out.push_back(pair_sum(j, frac(1, 2), -1));
            break;
        }
        case FamilyTag::SoddSp: {
            check_family_handle(fam, h, true);
            for (int j = 0; j <= n * k - 2; j += 2) out.push_back(pair_sum(j, frac(1, 2), +1));
            break;
        }
        case FamilyTag::OoddO: {
            check_family_handle(fam, h, false);
            for (int j = 1; j <= (n + 1) * (k + 1) - 2 - k; j += 2) {
                State s = h->zero();
                for (int i = 0; i < n; ++i) s += wick(h->gen_state(i, j), h->gen_state(i, 0));
                out.push_back(s * Scalar(frac(1, 2)));
            }
            break;
        }
        case FamilyTag::OevO: {
            check_family_handle(fam, h, false);
            if (k == 2) {
                for (int j = 0; j <= n * n + 3 * n - 2; j += 2) {
                    State s = h->zero();
                    for (int i = 0; i < n; ++i) s += wick(h->gen_state(i, j), h->gen_state(i, 0));
                    out.push_back(s * Scalar(frac(1, 2)));
                }
            } else {
                int top = (n + 1) * k + n * (n + 1) - k - 2;
                for (int j = 0; j <= top; j += 2) {
                    State s = h->zero();
                    for (int i = 0; i < n; ++i) s += wick(h->gen_state(i, 0), h->gen_state(i, j));
                    out.push_back(s);
                }
            }
            break;
        }
        case FamilyTag::SevGL: {
            check_family_handle(fam, h, true);
            for (int j = 0; j <= n * (n + 1) + n * k - 1; ++j) out.push_back(pair_sum(j, 1, 0));
            break;
        }
        case FamilyTag::OevGL: {
            check_family_handle(fam, h, true);
            for (int j = 0; j <= n * (n + 1) + n * k - 1; ++j) out.push_back(pair_sum(j, 1, 0));
            break;
        }
        case FamilyTag::SoddGL:
        case FamilyTag::OoddGL: {
            check_family_handle(fam, h, true);
            for (int j = 0; j <= n * k - 1; ++j) out.push_back(pair_sum(j, 1, 0));
            break;
        }
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> zero_matrix(int g) {
    return std::vector<std::vector<Rational>>((std::size_t)g,
                                              std::vector<Rational>((std::size_t)g, Rational(0)));
}

// gl(n) acting on pairs (a_1..a_n; b_1..b_n) as V + V*.
std::vector<std::vector<std::vector<Rational>>> gl_pairs(int n) {
    std::vector<std::vector<std::vector<Rational>>> ops;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            auto m = zero_matrix(2 * n);
            m[(std::size_t)p][(std::size_t)q] = Rational(1);        // a_q -> a_p
            m[(std::size_t)(n + q)][(std::size_t)(n + p)] = Rational(-1);  // b_p -> -b_q
            ops.push_back(std::move(m));
        }
    return ops;
}

}  // namespace

LinearAction family_action(const QuadraticFamily& fam, const AlgebraPtr& h) {
    const int n = fam.n;
    LinearAction act;
    switch (fam.tag) {
        case FamilyTag::SevSp:
        case FamilyTag::SoddSp: {
            // sp(2n) for the pairing <a_i, b_j> = delta_ij
            act.lie = gl_pairs(n);
            for (int p = 0; p < n; ++p)
                for (int q = p; q < n; ++q) {
                    auto m = zero_matrix(2 * n);
                    m[(std::size_t)p][(std::size_t)(n + q)] = Rational(1);  // b_q -> a_p
                    m[(std::size_t)q][(std::size_t)(n + p)] = Rational(1);  // b_p -> a_q
                    act.lie.push_back(std::move(m));
                    auto w = zero_matrix(2 * n);
                    w[(std::size_t)(n + p)][(std::size_t)q] = Rational(1);  // a_q -> b_p
                    w[(std::size_t)(n + q)][(std::size_t)p] = Rational(1);  // a_p -> b_q
                    act.lie.push_back(std::move(w));
                }
            break;
        }
        case FamilyTag::OoddO:
        case FamilyTag::OevO: {
            // so(n) rotations plus one reflection
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q) {
                    auto m = zero_matrix(n);
                    m[(std::size_t)p][(std::size_t)q] = Rational(1);
                    m[(std::size_t)q][(std::size_t)p] = Rational(-1);
                    act.lie.push_back(std::move(m));
                }
            DiagonalAction refl;
            refl.modulus = 2;
            refl.charge.assign((std::size_t)n, 0);
            refl.charge[0] = 1;
            act.diagonal.push_back(std::move(refl));
            break;
        }
        case FamilyTag::SevGL:
        case FamilyTag::OevGL:
        case FamilyTag::SoddGL:
        case FamilyTag::OoddGL:
            act.lie = gl_pairs(n);
            break;
    }
    validate_linear_action(h, act);
    return act;
}

// --- decoupling -------------------------------------------------------------

std::string genword_str(const GenWord& w, const std::vector<std::string>& names) {
    auto one = [&](const std::pair<int, int>& f) {
        std::string s;
        if (f.second == 1) s += "d ";
        if (f.second > 1) s += "d^" + std::to_string(f.second) + " ";
        return s + names[(std::size_t)f.first];
    };
    if (w.size() == 1) return one(w[0]);
    std::string out = ":";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += one(w[i]);
    }
    return out + ":";
}

namespace {

void enum_genwords(const std::vector<Weight2>& weights, std::size_t from, Weight2 rem,
                   GenWord& cur, std::vector<GenWord>& out) {
    if (rem == 0 && !cur.empty()) out.push_back(cur);
    for (std::size_t i = from; i < weights.size(); ++i) {
        int min_dz = (!cur.empty() && cur.back().first == static_cast<int>(i))
                         ? cur.back().second
                         : 0;
        for (int dz = min_dz; weights[i] + 2 * dz <= rem; ++dz) {
            cur.push_back({static_cast<int>(i), dz});
            enum_genwords(weights, i, rem - weights[i] - 2 * dz, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<GenWord> enumerate_genwords(const std::vector<Weight2>& gen_weights, Weight2 w2) {
    std::vector<GenWord> out;
    GenWord cur;
    enum_genwords(gen_weights, 0, w2, cur, out);
    std::stable_sort(out.begin(), out.end(), [](const GenWord& a, const GenWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

State eval_genword(const AlgebraPtr& h, const std::vector<State>& gens, const GenWord& w) {
    std::vector<State> parts;
    for (const auto& [idx, dz] : w) parts.push_back(derivative(gens[(std::size_t)idx], dz));
    return iterated_wick(parts);
}

std::optional<Relation> decouple(const AlgebraPtr& h, const std::vector<State>& gens,
                                 const State& target) {
    auto w2opt = target.weight2();
    if (!w2opt) throw std::invalid_argument("decouple: target must be weight-homogeneous");
    Weight2 w2 = *w2opt;
    std::vector<Weight2> gw;
    for (const auto& g : gens) {
        auto gw2 = g.weight2();
        if (!gw2) throw std::invalid_argument("decouple: generators must be weight-homogeneous");
        gw.push_back(*gw2);
    }
    std::vector<Word> basis = h->basis_words(w2);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    auto coords = [&](const State& s) {
        Vec v(basis.size(), Scalar(0));
        for (const auto& [w, c] : s.terms()) v[index.at(w)] = c;
        return v;
    };
    std::vector<GenWord> words = enumerate_genwords(gw, w2);
    std::vector<Vec> cols;
    std::vector<State> states;
    for (const auto& w : words) {
        State s = eval_genword(h, gens, w);
        cols.push_back(coords(s));
        states.push_back(std::move(s));
    }
    auto sol = solve_columns(cols, coords(target));
    if (!sol) return std::nullopt;
    Relation rel;
    rel.target_state = target;
    rel.rhs_state = h->zero();
    for (std::size_t i = 0; i < words.size(); ++i) {
        if ((*sol)[i].is_zero()) continue;
        rel.rhs.push_back({words[i], (*sol)[i]});
        rel.rhs_state += states[i] * (*sol)[i];
    }
    if (!(rel.rhs_state == target))
        throw std::logic_error("decouple: solver produced an unverified relation");
    return rel;
}

StrongGenReport verify_strong_generation(const AlgebraPtr& h, const LinearAction& act,
                                         const std::vector<State>& gens, Weight2 maxweight2) {
    StrongGenReport rep;
    std::vector<Weight2> gw;
    for (const auto& g : gens) gw.push_back(g.weight2().value());
    for (Weight2 w2 = 1; w2 <= maxweight2; ++w2) {
        std::vector<Word> basis = h->basis_words(w2);
        if (basis.empty()) continue;
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        RowEchelon span(basis.size());
        for (const auto& w : enumerate_genwords(gw, w2)) {
            State s = eval_genword(h, gens, w);
            Vec v(basis.size(), Scalar(0));
            for (const auto& [word, c] : s.terms()) v[index.at(word)] = c;
            span.add(std::move(v));
        }
        std::size_t inv = invariant_states(h, act, w2).size();
        rep.rows.push_back({w2, span.rank(), inv});
        if (span.rank() != inv) rep.full_span = false;
    }
    return rep;
}

// --- bootstrap on the quadratic ladder ---------------------------------------

std::optional<std::map<std::pair<int, int>, Scalar>> ladder_expand(const AlgebraPtr& h,
                                                                   const State& s) {
    auto w2opt = s.weight2();
    if (!w2opt) return std::nullopt;
    Weight2 w2 = *w2opt;
    std::vector<std::pair<int, int>> keys;
    std::vector<State> ladder;
    for (int m = 0; 4 * m + 4 <= w2; ++m) {
        int j = static_cast<int>(w2 - 4 * m - 4);
        if (j % 2) continue;
        j /= 2;
        keys.push_back({m, j});
        ladder.push_back(derivative(wick(h->gen_state(0, 2 * m), h->gen_state(0, 0)), j));
    }
    std::vector<Word> basis = h->basis_words(w2);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    auto coords = [&](const State& x) {
        Vec v(basis.size(), Scalar(0));
        for (const auto& [w, c] : x.terms()) v[index.at(w)] = c;
        return v;
    };
    std::vector<Vec> cols;
    for (const auto& l : ladder) cols.push_back(coords(l));
    auto sol = solve_columns(cols, coords(s));
    if (!sol) return std::nullopt;
    std::map<std::pair<int, int>, Scalar> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (!(*sol)[i].is_zero()) out[keys[i]] = (*sol)[i];
    return out;
}

namespace {

std::string ladder_term_str(int m, int j, const Scalar& c) {
    std::string s = c.str();
    if (j > 0) s += " d^" + std::to_string(j);
    return s + " w[" + std::to_string(2 * m) + ",0]";
}

}  // namespace

std::vector<BootstrapStep> decouple_bootstrap(const AlgebraPtr& h,
                                              const std::vector<State>& gens, const State& pump,
                                              const Relation& start, int count) {
    std::vector<BootstrapStep> steps;
    Weight2 w2 = start.target_state.weight2().value_or(0);
    if (w2 < 4 || (w2 - 4) % 4 != 0)
        throw std::invalid_argument("bootstrap: start target is not a ladder field");
    int m_prev = static_cast<int>((w2 - 4) / 4);
    for (int step = 0; step < count; ++step) {
        BootstrapStep bs;
        int m_new = m_prev + 1;
        bs.target_index = m_new;
        State prev_target = wick(h->gen_state(0, 2 * m_prev), h->gen_state(0, 0));
        State pumped = nth_product(pump, 1, prev_target);
        auto expansion = ladder_expand(h, pumped);
        if (!expansion) {
            bs.error = "pump image does not lie in the quadratic ladder";
            steps.push_back(std::move(bs));
            break;
        }
        std::string id = "(w[2,0])_(1) w[" + std::to_string(2 * m_prev) + ",0] =";
        bool first = true;
        for (const auto& [key, c] : *expansion) {
            id += (first ? " " : " + ") + ladder_term_str(key.first, key.second, c);
            first = false;
        }
        bs.pump_identity = id;
        auto lead = expansion->find({m_new, 0});
        if (lead == expansion->end() || lead->second.is_zero()) {
            bs.error = "elimination fails: target coefficient vanishes";
            steps.push_back(std::move(bs));
            break;
        }
        bs.lead_coeff = lead->second;
        State new_target = wick(h->gen_state(0, 2 * m_new), h->gen_state(0, 0));
        auto rel = decouple(h, gens, new_target);
        if (!rel) {
            bs.error = "no decoupling relation exists at the eliminated weight";
            steps.push_back(std::move(bs));
            break;
        }
        bs.relation = std::move(rel);
        bs.ok = true;
        steps.push_back(std::move(bs));
        m_prev = m_new;
    }
    return steps;
}

}  // namespace voa
