#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algebra_json.hpp"
#include "exprparse.hpp"
#include "identities.hpp"
#include "standard.hpp"

using namespace voa;

namespace {

// seeded random homogeneous state of the requested weight
State random_state(std::mt19937_64& rng, const AlgebraPtr& h, Weight2 w2) {
    auto basis = h->basis_words(w2);
    REQUIRE(!basis.empty());
    std::uniform_int_distribution<int> coeff(-3, 3);
    State s = h->zero();
    int tries = 0;
    while (s.is_zero() && tries++ < 8)
        for (const auto& w : basis) {
            int c = coeff(rng);
            if (c) s += h->make(w) * Scalar(Rational(c));
        }
    return s;
}

// parity-homogeneous random state: restrict to words of one parity
State random_state_parity(std::mt19937_64& rng, const AlgebraPtr& h, Weight2 w2, int parity) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    State s = h->zero();
    for (const auto& w : h->basis_words(w2))
        if (h->parity(w) == parity) {
            int c = coeff(rng);
            if (c) s += h->make(w) * Scalar(Rational(c));
        }
    return s;
}

// independent combinatorial count of PBW monomials: a knapsack over factor
// types (g, k), bosonic factors unbounded, fermionic at most once
std::size_t dimension_oracle(const AlgebraPtr& h, Weight2 w2) {
    std::vector<std::size_t> dp(static_cast<std::size_t>(w2) + 1, 0);
    dp[0] = 1;
    for (std::size_t g = 0; g < h->num_generators(); ++g) {
        Weight2 base = h->generator(static_cast<int>(g)).weight2;
        bool odd = h->generator(static_cast<int>(g)).parity == Parity::odd;
        for (Weight2 k = 0; base + 2 * k <= w2; ++k) {
            Weight2 fw = base + 2 * k;
            if (odd) {
                for (Weight2 t = w2; t >= fw; --t) dp[t] += dp[t - fw];
            } else {
                for (Weight2 t = fw; t <= w2; ++t) dp[t] += dp[t - fw];
            }
        }
    }
    return dp[static_cast<std::size_t>(w2)];
}

}  // namespace

TEST_CASE("heisenberg golden products") {
    auto h = heisenberg(1);
    State a = h->gen_state(0);
    CHECK(nth_product(a, 1, a) == h->vacuum());
    CHECK(nth_product(a, 0, a).is_zero());
    CHECK(nth_product(derivative(a), 2, a) == h->vacuum() * Scalar(-2));
    CHECK(derivative(h->vacuum()).is_zero());
    CHECK(derivative(wick(a, a)) == h->make(Word{{0, 1}, {0, 0}}) * Scalar(2));
    CHECK(derivative(derivative(a)) == h->make(Word{{0, 2}}));
}

TEST_CASE("wick unit and iterated nesting") {
    auto h = heisenberg(1);
    State a = h->gen_state(0);
    State b = wick(a, a);
    CHECK(wick(h->vacuum(), b) == b);
    CHECK(wick(b, h->vacuum()) == b);
    CHECK(iterated_wick({a, a, a}) == h->make(Word{{0, 0}, {0, 0}, {0, 0}}));
}

TEST_CASE("ordering corrections match skew-symmetry") {
    // Heisenberg: the two orderings agree (central corrections vanish)
    auto h = heisenberg(1);
    State a = h->gen_state(0);
    CHECK(wick(a, derivative(a)) == wick(derivative(a), a));
    // Virasoro: :L dL: - :(dL) L: = (1/6) d^3 L, computed two independent ways
    auto v = virasoro(Scalar(frac(1, 2)));
    State L = v->gen_state(0);
    State dL = derivative(L);
    State diff = wick(L, dL) - wick(dL, L);
    CHECK(diff == derivative(L, 3) * Scalar(frac(1, 6)));
    State via_skew = v->prod_via_skew(L, -1, dL) - wick(dL, L);
    CHECK(diff == via_skew);
}

TEST_CASE("quadratic ladder of the sign orbifold") {
    auto h = heisenberg(1);
    auto omega = [&](int i, int j) { return wick(h->gen_state(0, i), h->gen_state(0, j)); };
    State w00 = omega(0, 0), w20 = omega(2, 0), w40 = omega(4, 0), w60 = omega(6, 0);
    CHECK(omega(1, 1) == -w20 + derivative(w00, 2) * Scalar(frac(1, 2)));
    CHECK(omega(3, 1) == -w40 + derivative(w20, 2) * Scalar(frac(3, 2)) -
                             derivative(w00, 4) * Scalar(frac(1, 4)));
    CHECK(nth_product(w20, 1, w00) == w20 * Scalar(8));
    CHECK(nth_product(w20, 1, w20) ==
          w40 * Scalar(12) - derivative(w20, 2) * Scalar(8) + derivative(w00, 4) * Scalar(2));
    CHECK(nth_product(w20, 1, w40) == omega(4, 2) * Scalar(4) + w60 * Scalar(12));
    CHECK(nth_product(w20, 1, w40) == w60 * Scalar(16) - derivative(w40, 2) * Scalar(16) +
                                          derivative(w20, 4) * Scalar(20) -
                                          derivative(w00, 6) * Scalar(4));
    CHECK(nth_product(w20, 1, derivative(w20, 2)) == derivative(w40, 2) * Scalar(24) -
                                                         derivative(w20, 4) * Scalar(22) +
                                                         derivative(w00, 6) * Scalar(5));
    CHECK(nth_product(w20, 1, derivative(w00, 2)) ==
          derivative(w20, 2) * Scalar(20) - derivative(w00, 4) * Scalar(2));
    CHECK(nth_product(w20, 1, derivative(w00)) ==
          derivative(w20) * Scalar(14) - derivative(w00, 3));
}

TEST_CASE("basis enumeration and dimensions") {
    auto h = heisenberg(1);
    CHECK(h->graded_dimension(0) == 1);
    CHECK(h->graded_dimension(2) == 1);
    CHECK(h->graded_dimension(4) == 2);  // :aa:, da
    auto words = h->basis_words(4);
    CHECK(words.size() == 2);
    auto f = free_fermion(1);
    CHECK(f->graded_dimension(1) == 1);
    CHECK(f->graded_dimension(2) == 0);  // :pp: vanishes by oddness
    CHECK(f->graded_dimension(4) == 1);  // :(dp)p:
    for (const AlgebraPtr& alg :
         {heisenberg(2), free_fermion(2), beta_gamma(1), symplectic_fermion(1), s_ev(1, 3)})
        for (Weight2 w2 = 0; w2 <= 9; ++w2)
            CHECK(alg->graded_dimension(w2) == dimension_oracle(alg, w2));
}

TEST_CASE("weight bookkeeping of products") {
    std::mt19937_64 rng(11);
    auto h = beta_gamma(1);
    for (int trial = 0; trial < 20; ++trial) {
        Weight2 wa = 1 + static_cast<Weight2>(rng() % 5);
        Weight2 wb = 1 + static_cast<Weight2>(rng() % 5);
        State a = random_state(rng, h, wa);
        State b = random_state(rng, h, wb);
        if (a.is_zero() || b.is_zero()) continue;
        for (long n = -2; 2 * (n + 1) <= wa + wb + 2; ++n) {
            State p = nth_product(a, n, b);
            if (2 * (n + 1) > wa + wb) CHECK(p.is_zero());
            if (!p.is_zero()) CHECK(p.weight2() == wa + wb - 2 * (n + 1));
        }
    }
}

TEST_CASE("derivation and path independence properties") {
    std::mt19937_64 rng(23);
    for (const AlgebraPtr& h : {heisenberg(2), free_fermion(2), symplectic_fermion(1)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Weight2 wa = 1 + static_cast<Weight2>(rng() % 5);
            Weight2 wb = 1 + static_cast<Weight2>(rng() % 5);
            State a = random_state_parity(rng, h, wa, static_cast<int>(rng() % 2));
            State b = random_state_parity(rng, h, wb, static_cast<int>(rng() % 2));
            if (a.is_zero() || b.is_zero()) continue;
            for (long n = -2; n <= 3; ++n) {
                // d is a derivation of every product
                State lhs = derivative(nth_product(a, n, b));
                State rhs = nth_product(derivative(a), n, b) + nth_product(a, n, derivative(b));
                CHECK(lhs == rhs);
                // direct route agrees with the skew-symmetry route
                CHECK(nth_product(a, n, b) == h->prod_via_skew(a, n, b));
            }
        }
    }
}

TEST_CASE("five identities on random triples") {
    std::mt19937_64 rng(31);
    for (const AlgebraPtr& h :
         {heisenberg(2), free_fermion(2), beta_gamma(1), symplectic_fermion(1)}) {
        for (int trial = 0; trial < 4; ++trial) {
            Weight2 wa = 1 + static_cast<Weight2>(rng() % 4);
            Weight2 wb = 1 + static_cast<Weight2>(rng() % 4);
            Weight2 wc = 1 + static_cast<Weight2>(rng() % 4);
            State a = random_state_parity(rng, h, wa, static_cast<int>(rng() % 2));
            State b = random_state_parity(rng, h, wb, static_cast<int>(rng() % 2));
            State c = random_state_parity(rng, h, wc, static_cast<int>(rng() % 2));
            if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
            auto rep = check_identities(a, b, c, 3);
            for (const auto& ch : rep.checks) {
                INFO(ch.name << " " << ch.witness);
                CHECK(ch.pass);
            }
        }
    }
}

TEST_CASE("build validation rejects inconsistent tables") {
    // mismatched skew pair
    LieConformalSpec s;
    s.field = FieldDesc::rational();
    s.generators.push_back({"a", Parity::even, 2});
    s.generators.push_back({"b", Parity::even, 2});
    BracketRhs one;
    one.central = Scalar(1);
    s.set_bracket(0, 1, 1, one);
    BracketRhs wrong;
    wrong.central = Scalar(2);
    s.set_bracket(1, 0, 1, wrong);
    CHECK_THROWS_WITH_AS(Algebra::build(std::move(s)),
                         doctest::Contains("inconsistent bracket table"), std::invalid_argument);

    // broken Jacobi: [x,y] = y with x,y "orthonormal" is not invariant
    LieConformalSpec j;
    j.field = FieldDesc::rational();
    j.generators.push_back({"x", Parity::even, 2});
    j.generators.push_back({"y", Parity::even, 2});
    BracketRhs diag;
    diag.central = Scalar(1);
    j.set_bracket(0, 0, 1, diag);
    j.set_bracket(1, 1, 1, diag);
    BracketRhs xy;
    xy.terms.push_back({1, 0, Scalar(1)});
    j.set_bracket(0, 1, 0, xy);
    CHECK_THROWS_AS(Algebra::build(std::move(j)), std::invalid_argument);

    // empty generator list: the one-dimensional algebra
    LieConformalSpec e;
    e.field = FieldDesc::rational();
    auto triv = Algebra::build(std::move(e));
    CHECK(triv->graded_dimension(0) == 1);
    CHECK(triv->graded_dimension(2) == 0);

    // weight bound violation
    LieConformalSpec w;
    w.field = FieldDesc::rational();
    w.generators.push_back({"a", Parity::even, 2});
    BracketRhs bad;
    bad.central = Scalar(1);
    w.set_bracket(0, 0, 2, bad);
    CHECK_THROWS_AS(Algebra::build(std::move(w)), std::invalid_argument);
}

TEST_CASE("mixed-algebra operands are rejected") {
    auto h1 = heisenberg(1);
    auto h2 = heisenberg(1);
    CHECK_THROWS_AS(nth_product(h1->gen_state(0), 0, h2->gen_state(0)), std::invalid_argument);
}

TEST_CASE("standard family OPE normalizations") {
    auto se = s_ev(1, 3);
    State a = se->gen_state(0), b = se->gen_state(1);
    CHECK(nth_product(a, 2, b) == se->vacuum());
    CHECK(nth_product(b, 2, a) == -se->vacuum());
    CHECK(nth_product(a, 0, b).is_zero());
    CHECK(nth_product(a, 1, b).is_zero());

    auto so = s_odd(1, 2);  // symplectic fermion pattern
    CHECK(nth_product(so->gen_state(0), 1, so->gen_state(1)) == so->vacuum());
    CHECK(nth_product(so->gen_state(1), 1, so->gen_state(0)) == -so->vacuum());

    auto oo = o_odd(1, 3);
    CHECK(nth_product(oo->gen_state(0), 2, oo->gen_state(0)) == oo->vacuum());

    auto oe = o_ev(1, 4);
    CHECK(nth_product(oe->gen_state(0), 3, oe->gen_state(0)) == oe->vacuum());

    auto bg = beta_gamma(1);
    CHECK(nth_product(bg->gen_state(0), 0, bg->gen_state(1)) == bg->vacuum());
    CHECK(nth_product(bg->gen_state(1), 0, bg->gen_state(0)) == -bg->vacuum());

    auto e = bc_system(1);
    CHECK(nth_product(e->gen_state(0), 0, e->gen_state(1)) == e->vacuum());
    CHECK(nth_product(e->gen_state(1), 0, e->gen_state(0)) == e->vacuum());

    CHECK_THROWS_AS(s_ev(1, 2), std::invalid_argument);  // parity constraint
    CHECK_THROWS_AS(o_ev(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_odd(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(o_odd(1, 2), std::invalid_argument);
}

TEST_CASE("deformable family and its limit") {
    auto d = deformable_affine_sl2();
    auto lim = limit_infinity(d);
    // the limit is the rank three Heisenberg algebra
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            State one = nth_product(lim.limit->gen_state(i), 1, lim.limit->gen_state(j));
            CHECK(one == (i == j ? lim.limit->vacuum() : lim.limit->zero()));
            CHECK(nth_product(lim.limit->gen_state(i), 0, lim.limit->gen_state(j)).is_zero());
        }
    // x1_(0) x2 is (1/kappa) x3
    State x12 = nth_product(d->gen_state(0), 0, d->gen_state(1));
    CHECK(x12 == d->gen_state(2) * d->scalar("1/kappa"));
    CHECK(lim.map(x12).is_zero());  // degree -1 coefficients vanish at infinity
    // functoriality on all basis pairs of weight <= 3 for all defined n
    for (Weight2 wa = 0; wa <= 6; ++wa)
        for (Weight2 wb = 0; wb <= 6; ++wb)
            for (const auto& aw : d->basis_words(wa))
                for (const auto& bw : d->basis_words(wb)) {
                    State a = d->make(aw), b = d->make(bw);
                    for (long n = -3; 2 * (n + 1) <= wa + wb; ++n) {
                        State lhs = lim.map(nth_product(a, n, b));
                        State rhs = nth_product(lim.map(a), n, lim.map(b));
                        CHECK(lhs == rhs);
                    }
                }
    // constant-coefficient spec is unchanged by the limit
    auto v = virasoro(Scalar(RatFunc::constant("k", Rational(7))), FieldDesc::ratfunc("k"));
    auto vlim = limit_infinity(v);
    CHECK(nth_product(vlim.limit->gen_state(0), 3, vlim.limit->gen_state(0)) ==
          vlim.limit->vacuum() * Scalar(frac(7, 2)));
}

TEST_CASE("shapovalov grams") {
    auto h = heisenberg(1);
    auto g1 = shapovalov_gram(h, 2);
    CHECK(g1.basis.size() == 1);
    CHECK(g1.det == Scalar(1));
    auto v = virasoro(Scalar(RatFunc::variable("c")), FieldDesc::ratfunc("c"));
    auto g2 = shapovalov_gram(v, 4);
    CHECK(g2.basis.size() == 1);
    CHECK(g2.det == Scalar(RatFunc::parse("c/2", "c")));
    auto d = deformable_affine_sl2();
    auto g3 = shapovalov_gram(d, 2);
    CHECK(g3.basis.size() == 3);
    CHECK(g3.det == Scalar(1));
    // nondegeneracy at low weights for the standard free-field algebras
    for (const AlgebraPtr& alg :
         {heisenberg(1), free_fermion(1), beta_gamma(1), symplectic_fermion(1)})
        for (Weight2 w2 = 1; w2 <= 8; ++w2) {
            auto g = shapovalov_gram(alg, w2);
            CHECK(!g.det.is_zero());
        }
}

TEST_CASE("expression parser round trip") {
    auto h = heisenberg(2);
    State s = parse_expr(":a1 a1: + 2*d^2 a2 - 1/3*:a1 :a1 a2::", h);
    CHECK(parse_expr(s.str(), h) == s);
    CHECK(parse_expr(":a1 a1:", h) == wick(h->gen_state(0), h->gen_state(0)));
    CHECK(parse_expr("(d^2 a1) _( -1 ) a1", h) == wick(h->gen_state(0, 2), h->gen_state(0)));
    CHECK(parse_expr("a1 _(1) a1", h) == h->vacuum());
    CHECK(parse_expr("omega(4,0)", h) == wick(h->gen_state(0, 4), h->gen_state(0)));
    // right-nesting convention
    CHECK(parse_expr(":a1 :a1 a1::", h) == parse_expr(":a1 a1 a1:", h));
    CHECK_THROWS(parse_expr("nope", h));
    CHECK_THROWS(parse_expr("a1 +", h));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        State r = random_state(rng, h, 2 * (1 + static_cast<Weight2>(rng() % 4)));
        CHECK(parse_expr(r.str(), h) == r);
    }
}

TEST_CASE("algebra spec json round trip") {
    auto h = symplectic_fermion(2);
    auto j = algebra_to_json(h);
    auto h2 = algebra_from_json(j);
    CHECK(h2->num_generators() == 4);
    // same products after the round trip
    State p = nth_product(h2->gen_state(0), 1, h2->gen_state(2));
    CHECK(p == h2->vacuum());
    // spec-format ingestion with names and string coefficients
    auto custom = algebra_from_json_text(R"({
      "generators":[{"name":"x","parity":"even","weight2x":2}],
      "field":{"kind":"rational"},
      "brackets":[{"a":"x","b":"x","j":1,"central":"3/2"}]
    })");
    CHECK(nth_product(custom->gen_state(0), 1, custom->gen_state(0)) ==
          custom->vacuum() * Scalar(frac(3, 2)));
}
