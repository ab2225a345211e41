#include "conformal.hpp"

#include <stdexcept>

namespace voa {

Scalar central_charge(const State& L) {
    const AlgebraPtr& alg = L.algebra();
    auto fail = [&](const std::string& what, const State& got) {
        throw std::domain_error("not a conformal vector: " + what + " = " + got.str());
    };
    if (L.weight2() != Weight2(4)) fail("weight", L);
    State d = nth_product(L, 0, L);
    if (!(d == derivative(L))) fail("L_(0)L", d);
    State two = nth_product(L, 1, L);
    if (!(two == L * Scalar(2))) fail("L_(1)L", two);
    State zero = nth_product(L, 2, L);
    if (!zero.is_zero()) fail("L_(2)L", zero);
    State top = nth_product(L, 3, L);
    Scalar half_c = top.vacuum_coeff();
    if (!(top == alg->vacuum() * half_c)) fail("L_(3)L", top);
    return half_c * Scalar(2);
}

namespace {

State quadratic(const AlgebraPtr& h, int i, int di, int j, int dj) {
    return wick(h->gen_state(i, di), h->gen_state(j, dj));
}

}  // namespace

VirasoroVector standard_virasoro(const AlgebraPtr& h, std::optional<Rational> lambda) {
    const auto& info = h->builtin();
    const int n = info.n;
    State L = h->zero();
    Rational lam = lambda.value_or(Rational(1, 2));
    if (info.kind == "heisenberg" || (info.kind == "o_ev" && info.k == 2)) {
        for (int i = 0; i < n; ++i) L += quadratic(h, i, 0, i, 0) * Scalar(Rational(1, 2));
    } else if (info.kind == "free_fermion" || (info.kind == "o_odd" && info.k == 1)) {
        for (int i = 0; i < n; ++i) L += quadratic(h, i, 0, i, 1) * Scalar(Rational(-1, 2));
    } else if (info.kind == "beta_gamma" || (info.kind == "s_ev" && info.k == 1)) {
        for (int i = 0; i < n; ++i) {
            L += quadratic(h, i, 0, n + i, 1) * Scalar(lam);
            L += quadratic(h, i, 1, n + i, 0) * Scalar(lam - 1);
        }
    } else if (info.kind == "bc") {
        // fermionic statistics flip the overall sign of the deformed vector
        for (int i = 0; i < n; ++i) {
            L += quadratic(h, i, 1, n + i, 0) * Scalar(Rational(1) - lam);
            L += quadratic(h, i, 0, n + i, 1) * Scalar(-lam);
        }
    } else if (info.kind == "symplectic_fermion" || (info.kind == "s_odd" && info.k == 2)) {
        for (int i = 0; i < n; ++i) L += quadratic(h, i, 0, n + i, 0) * Scalar(Rational(-1));
    } else if (info.kind == "virasoro") {
        L = h->gen_state(0);
    } else if (info.kind == "affine" && n == 3) {
        return sugawara(h, Rational(2));  // sl2
    } else {
        throw std::invalid_argument("standard_virasoro: unsupported handle kind '" + info.kind +
                                    "'");
    }
    return {L, central_charge(L)};
}

VirasoroVector sugawara(const AlgebraPtr& h, const Rational& h_vee) {
    const auto& info = h->builtin();
    if (info.kind != "affine" || !info.affine)
        throw std::invalid_argument("sugawara: handle is not an affine builtin");
    const AffineData& data = *info.affine;
    const std::size_t n = data.form.size();
    Scalar shifted = data.level + Scalar(h_vee);
    if (shifted.is_zero()) throw std::domain_error("critical level");
    // invert the form to express the dual basis
    std::vector<std::vector<Rational>> m = data.form;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && rat_is_zero(m[sel][col])) ++sel;
        if (sel == n) throw std::invalid_argument("sugawara: degenerate form");
        std::swap(m[sel], m[col]);
        std::swap(inv[sel], inv[col]);
        Rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || rat_is_zero(m[i][col])) continue;
            Rational f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    State L = h->zero();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (rat_is_zero(inv[a][b])) continue;
            L += quadratic(h, static_cast<int>(a), 0, static_cast<int>(b), 0) * Scalar(inv[a][b]);
        }
    L = L * (Scalar(Rational(1, 2)) * shifted.inverse());
    VirasoroVector vir{L, central_charge(L)};
    for (std::size_t a = 0; a < n; ++a) {
        PrimaryReport rep = is_primary(vir, h->gen_state(static_cast<int>(a)));
        if (!rep.primary || !(rep.weight == Scalar(1)))
            throw std::domain_error("sugawara: generator " + h->generator((int)a).name +
                                    " is not primary of weight one: " + rep.witness);
    }
    return vir;
}

PrimaryReport is_primary(const VirasoroVector& vir, const State& a) {
    PrimaryReport rep;
    auto w2 = a.weight2();
    if (!w2) {
        rep.witness = "state is not weight-homogeneous";
        return rep;
    }
    rep.weight = Scalar(frac(*w2, 2));
    State l1 = nth_product(vir.L, 1, a);
    if (!(l1 == a * rep.weight)) {
        rep.witness = "L_(1)a = " + l1.str();
        return rep;
    }
    Weight2 bound2 = vir.L.weight2().value_or(4) + *w2;
    for (long n = 2; 2 * n <= bound2; ++n) {
        State ln = nth_product(vir.L, n, a);
        if (!ln.is_zero()) {
            rep.witness = "L_(" + std::to_string(n) + ")a = " + ln.str();
            return rep;
        }
    }
    rep.primary = true;
    return rep;
}

Scalar walg_central_charge(const WAlgCharacterData& d) {
    Scalar shifted = d.level + Scalar(d.h_vee);
    if (shifted.is_zero()) throw std::domain_error("critical level");
    Scalar c = d.level * Scalar(Rational(d.sdim_g)) * shifted.inverse();
    c -= d.level * Scalar(Rational(12) * d.x_norm);
    Rational corr(0);
    for (const auto& [m, parity] : d.plus_part) {
        Rational t = Rational(12) * m * m - Rational(12) * m + 2;
        corr += (parity == Parity::odd) ? -t : t;
    }
    c -= Scalar(corr);
    c -= Scalar(frac(d.sdim_g_half, 2));
    return c;
}

}  // namespace voa
