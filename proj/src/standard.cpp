#include "standard.hpp"

#include <sstream>
#include <stdexcept>

namespace voa {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

LieConformalSpec base_spec(FieldDesc field) {
    LieConformalSpec s;
    s.field = std::move(field);
    return s;
}

void add_gens(LieConformalSpec& s, const std::vector<std::string>& names, Parity p, Weight2 w2) {
    for (const auto& n : names) s.generators.push_back({n, p, w2});
}

BracketRhs central_one() {
    BracketRhs r;
    r.central = Scalar(1);
    return r;
}

}  // namespace

AlgebraPtr heisenberg(int n) {
    if (n < 1) throw std::invalid_argument("heisenberg: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("a", n), Parity::even, 2);
    for (int i = 0; i < n; ++i) s.set_bracket(i, i, 1, central_one());
    return Algebra::build(std::move(s), {"heisenberg", n, 2, {}});
}

AlgebraPtr heisenberg_degenerate(int n) {
    if (n < 1) throw std::invalid_argument("heisdeg: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("a", n), Parity::even, 2);
    return Algebra::build(std::move(s), {"heisdeg", n, 2, {}});
}

AlgebraPtr heisenberg_pairs(int n) {
    if (n < 1) throw std::invalid_argument("heispair: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("x", n), Parity::even, 2);
    add_gens(s, numbered("y", n), Parity::even, 2);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, 1, central_one());
    return Algebra::build(std::move(s), {"heispair", n, 2, {}});
}

AlgebraPtr free_fermion(int n) {
    if (n < 1) throw std::invalid_argument("freefermion: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("p", n), Parity::odd, 1);
    for (int i = 0; i < n; ++i) s.set_bracket(i, i, 0, central_one());
    return Algebra::build(std::move(s), {"free_fermion", n, 1, {}});
}

AlgebraPtr beta_gamma(int n) {
    if (n < 1) throw std::invalid_argument("betagamma: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("b", n), Parity::even, 1);
    add_gens(s, numbered("g", n), Parity::even, 1);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, 0, central_one());
    return Algebra::build(std::move(s), {"beta_gamma", n, 1, {}});
}

AlgebraPtr bc_system(int n) {
    if (n < 1) throw std::invalid_argument("bc: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("b", n), Parity::odd, 1);
    add_gens(s, numbered("c", n), Parity::odd, 1);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, 0, central_one());
    return Algebra::build(std::move(s), {"bc", n, 1, {}});
}

AlgebraPtr symplectic_fermion(int n) {
    if (n < 1) throw std::invalid_argument("sympfermion: n >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("e", n), Parity::odd, 2);
    add_gens(s, numbered("f", n), Parity::odd, 2);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, 1, central_one());
    return Algebra::build(std::move(s), {"symplectic_fermion", n, 2, {}});
}

AlgebraPtr o_ev(int n, int k) {
    if (n < 1 || k < 2 || k % 2 != 0) throw std::invalid_argument("oev: need n >= 1, k even >= 2");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("a", n), Parity::even, k);
    for (int i = 0; i < n; ++i) s.set_bracket(i, i, k - 1, central_one());
    return Algebra::build(std::move(s), {"o_ev", n, k, {}});
}

AlgebraPtr o_odd(int n, int k) {
    if (n < 1 || k < 1 || k % 2 != 1) throw std::invalid_argument("oodd: need n >= 1, k odd >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("a", n), Parity::odd, k);
    for (int i = 0; i < n; ++i) s.set_bracket(i, i, k - 1, central_one());
    return Algebra::build(std::move(s), {"o_odd", n, k, {}});
}

AlgebraPtr s_ev(int n, int k) {
    if (n < 1 || k < 1 || k % 2 != 1) throw std::invalid_argument("sev: need n >= 1, k odd >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("a", n), Parity::even, k);
    add_gens(s, numbered("b", n), Parity::even, k);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, k - 1, central_one());
    return Algebra::build(std::move(s), {"s_ev", n, k, {}});
}

AlgebraPtr s_odd(int n, int k) {
    if (n < 1 || k < 2 || k % 2 != 0) throw std::invalid_argument("sodd: need n >= 1, k even >= 2");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("a", n), Parity::odd, k);
    add_gens(s, numbered("b", n), Parity::odd, k);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, k - 1, central_one());
    return Algebra::build(std::move(s), {"s_odd", n, k, {}});
}

AlgebraPtr o_ev_pairs(int n, int k) {
    if (n < 1 || k < 2 || k % 2 != 0)
        throw std::invalid_argument("oevpair: need n >= 1, k even >= 2");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("e", n), Parity::even, k);
    add_gens(s, numbered("f", n), Parity::even, k);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, k - 1, central_one());
    return Algebra::build(std::move(s), {"o_ev_pair", n, k, {}});
}

AlgebraPtr o_odd_pairs(int n, int k) {
    if (n < 1 || k < 1 || k % 2 != 1)
        throw std::invalid_argument("ooddpair: need n >= 1, k odd >= 1");
    auto s = base_spec(FieldDesc::rational());
    add_gens(s, numbered("e", n), Parity::odd, k);
    add_gens(s, numbered("f", n), Parity::odd, k);
    for (int i = 0; i < n; ++i) s.set_bracket(i, n + i, k - 1, central_one());
    return Algebra::build(std::move(s), {"o_odd_pair", n, k, {}});
}

AlgebraPtr virasoro(const Scalar& c, const FieldDesc& field) {
    auto s = base_spec(field);
    s.generators.push_back({"L", Parity::even, 4});
    BracketRhs dL;
    dL.terms.push_back({0, 1, Scalar(1)});
    s.set_bracket(0, 0, 0, dL);
    BracketRhs twoL;
    twoL.terms.push_back({0, 0, Scalar(2)});
    s.set_bracket(0, 0, 1, twoL);
    BracketRhs half_c;
    half_c.central = c * Scalar(Rational(1, 2));
    s.set_bracket(0, 0, 3, half_c);
    return Algebra::build(std::move(s), {"virasoro", 1, 4, {}});
}

AlgebraPtr affine(const std::vector<std::string>& names, std::vector<std::vector<Rational>> form,
                  std::vector<std::vector<std::vector<Rational>>> structure, const Scalar& level,
                  const FieldDesc& field) {
    const std::size_t n = names.size();
    if (form.size() != n || structure.size() != n)
        throw std::invalid_argument("affine: dimension mismatch");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!(form[a][b] == form[b][a]))
                throw std::invalid_argument("affine: form must be symmetric");
            for (std::size_t c = 0; c < n; ++c)
                if (!(structure[a][b][c] == -structure[b][a][c]))
                    throw std::invalid_argument("affine: structure constants must be antisymmetric");
        }
    auto s = base_spec(field);
    add_gens(s, names, Parity::even, 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            BracketRhs first;
            for (std::size_t c = 0; c < n; ++c)
                if (!rat_is_zero(structure[a][b][c]))
                    first.terms.push_back(
                        {static_cast<int>(c), 0, Scalar(structure[a][b][c])});
            s.set_bracket(static_cast<int>(a), static_cast<int>(b), 0, first);
            BracketRhs second;
            second.central = level * Scalar(form[a][b]);
            s.set_bracket(static_cast<int>(a), static_cast<int>(b), 1, second);
        }
    AffineData data{std::move(form), std::move(structure), level};
    return Algebra::build(std::move(s),
                          {"affine", static_cast<int>(n), 2, std::move(data)});
}

AlgebraPtr affine_sl2(const Scalar& level, const FieldDesc& field) {
    // basis (e, h, f), trace form of the defining representation
    std::vector<std::vector<Rational>> form = {
        {Rational(0), Rational(0), Rational(1)},
        {Rational(0), Rational(2), Rational(0)},
        {Rational(1), Rational(0), Rational(0)}};
    auto zero3 = std::vector<Rational>(3, Rational(0));
    std::vector<std::vector<std::vector<Rational>>> f(3,
                                                      std::vector<std::vector<Rational>>(3, zero3));
    f[0][2][1] = Rational(1);   // [e,f] = h
    f[2][0][1] = Rational(-1);
    f[1][0][0] = Rational(2);   // [h,e] = 2e
    f[0][1][0] = Rational(-2);
    f[1][2][2] = Rational(-2);  // [h,f] = -2f
    f[2][1][2] = Rational(2);
    return affine({"e", "h", "f"}, std::move(form), std::move(f), level, field);
}

AlgebraPtr deformable_affine(std::vector<std::vector<std::vector<Rational>>> structure,
                             const std::string& param) {
    const std::size_t n = structure.size();
    FieldDesc field = FieldDesc::ratfunc(param);
    Scalar inv_kappa(RatFunc(param, UniPoly(Rational(1)), UniPoly::variable()));
    auto s = base_spec(field);
    add_gens(s, numbered("x", static_cast<int>(n)), Parity::even, 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c)
                if (!(structure[a][b][c] == -structure[b][a][c]))
                    throw std::invalid_argument("deformable: structure constants must be antisymmetric");
            BracketRhs first;
            for (std::size_t c = 0; c < n; ++c)
                if (!rat_is_zero(structure[a][b][c]))
                    first.terms.push_back(
                        {static_cast<int>(c), 0, inv_kappa * Scalar(structure[a][b][c])});
            s.set_bracket(static_cast<int>(a), static_cast<int>(b), 0, first);
            if (a == b) s.set_bracket(static_cast<int>(a), static_cast<int>(b), 1, central_one());
        }
    std::vector<std::vector<Rational>> delta(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) delta[i][i] = Rational(1);
    AffineData data{std::move(delta), std::move(structure), inv_kappa.inverse()};
    return Algebra::build(std::move(s),
                          {"deformable_affine", static_cast<int>(n), 2, std::move(data)});
}

AlgebraPtr deformable_affine_sl2(const std::string& param) {
    // totally antisymmetric rational model of sl2: [x1,x2] = x3 cyclically
    auto zero3 = std::vector<Rational>(3, Rational(0));
    std::vector<std::vector<std::vector<Rational>>> f(3,
                                                      std::vector<std::vector<Rational>>(3, zero3));
    int eps[3][3][3] = {};
    eps[0][1][2] = 1;
    eps[1][2][0] = 1;
    eps[2][0][1] = 1;
    eps[1][0][2] = -1;
    eps[2][1][0] = -1;
    eps[0][2][1] = -1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) f[a][b][c] = Rational(eps[a][b][c]);
    return deformable_affine(std::move(f), param);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

bool numeric_literal(const std::string& s) {
    for (char c : s)
        if (!isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/') return false;
    return !s.empty();
}

}  // namespace

AlgebraPtr standard_algebra(const std::string& name) {
    auto parts = split(name, ':');
    if (parts.empty()) throw std::invalid_argument("empty builtin name");
    const std::string& kind = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw std::invalid_argument("builtin '" + kind + "' takes " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (kind == "heisenberg") {
        want(1);
        return heisenberg(parse_int(parts[1]));
    }
    if (kind == "heisdeg") {
        want(1);
        return heisenberg_degenerate(parse_int(parts[1]));
    }
    if (kind == "heispair") {
        want(1);
        return heisenberg_pairs(parse_int(parts[1]));
    }
    if (kind == "freefermion") {
        want(1);
        return free_fermion(parse_int(parts[1]));
    }
    if (kind == "betagamma") {
        want(1);
        return beta_gamma(parse_int(parts[1]));
    }
    if (kind == "bc") {
        want(1);
        return bc_system(parse_int(parts[1]));
    }
    if (kind == "sympfermion") {
        want(1);
        return symplectic_fermion(parse_int(parts[1]));
    }
    if (kind == "oev") {
        want(2);
        return o_ev(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (kind == "oodd") {
        want(2);
        return o_odd(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (kind == "sev") {
        want(2);
        return s_ev(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (kind == "sodd") {
        want(2);
        return s_odd(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (kind == "oevpair") {
        want(2);
        return o_ev_pairs(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (kind == "ooddpair") {
        want(2);
        return o_odd_pairs(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (kind == "virasoro") {
        want(1);
        if (numeric_literal(parts[1])) return virasoro(Scalar(rat_parse(parts[1])));
        FieldDesc fd = FieldDesc::ratfunc(parts[1]);
        return virasoro(Scalar(RatFunc::variable(parts[1])), fd);
    }
    if (kind == "affine") {
        want(2);
        if (parts[1] != "sl2") throw std::invalid_argument("unknown affine algebra: " + parts[1]);
        if (numeric_literal(parts[2]))
            return affine_sl2(Scalar(rat_parse(parts[2])), FieldDesc::rational());
        return affine_sl2(Scalar(RatFunc::variable(parts[2])), FieldDesc::ratfunc(parts[2]));
    }
    if (kind == "deformable") {
        if (parts.size() == 2 && parts[1] == "sl2") return deformable_affine_sl2();
        if (parts.size() == 3 && parts[1] == "sl2") return deformable_affine_sl2(parts[2]);
        throw std::invalid_argument("unknown deformable family: " + name);
    }
    throw std::invalid_argument("unknown builtin algebra: " + name);
}

LimitResult limit_infinity(const AlgebraPtr& h) {
    if (h->field().kind != FieldDesc::kRatFunc)
        throw std::invalid_argument("limit: handle is not over rational functions");
    auto lim_scalar = [](const Scalar& s) -> Scalar {
        if (s.is_rational()) return s;
        return Scalar(s.ratfunc().limit_infinity());
    };
    LieConformalSpec lspec;
    lspec.field = FieldDesc::rational();
    lspec.generators = h->spec().generators;
    for (const auto& [key, rhs] : h->spec().brackets) {
        BracketRhs lr;
        try {
            for (const auto& t : rhs.terms) {
                Scalar c = lim_scalar(t.coeff);
                if (!c.is_zero()) lr.terms.push_back({t.gen, t.dz, c});
            }
            lr.central = lim_scalar(rhs.central);
        } catch (const std::domain_error&) {
            throw std::domain_error("no free-field limit: bracket coefficient has positive degree");
        }
        auto [a, b, j] = key;
        lspec.set_bracket(a, b, j, std::move(lr));
    }
    LimitResult out;
    out.limit = Algebra::build(std::move(lspec), {"limit", h->builtin().n, h->builtin().k, {}});
    return out;
}

State LimitResult::map(const State& a) const {
    State out = limit->zero();
    for (const auto& [w, c] : a.terms()) {
        Scalar lc = c.is_rational() ? c : Scalar(c.ratfunc().limit_infinity());
        out.add_term(w, lc);
    }
    return out;
}

}  // namespace voa
