#include "truncation.hpp"

#include <stdexcept>

namespace voa {

namespace {

RatFunc lin(const std::string& p, long a, long b) {
    // a*psi + b
    return RatFunc(p, UniPoly(std::vector<Rational>{Rational(b), Rational(a)}),
                   UniPoly(Rational(1)));
}

RatFunc rf_const(const std::string& p, long v) { return RatFunc::constant(p, Rational(v)); }

// The theorems' stated ranges exclude a few extreme labels from the
// isomorphism statements, but their parametrizations are still well-formed
// and are accepted for direct queries.
void check_curve_label(char family, long n, long m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument(std::string("out-of-range label ") + family + "(" +
                                    std::to_string(n) + "," + std::to_string(m) + ")");
}

}  // namespace

namespace {

CurvePoint curve_impl(long n, long sm, const std::string& p) {
    RatFunc psi = RatFunc::variable(p);
    CurvePoint out;
    out.c = -(lin(p, n, sm - n - 1) * lin(p, n - 1, sm - n + 1) * lin(p, n + 1, sm - n)) /
            (lin(p, 1, -1) * psi);
    RatFunc d1 = lin(p, n, sm - n - 2), d2 = lin(p, n - 2, sm - n + 2),
            d3 = lin(p, n + 2, sm - n);
    if (!d1.is_zero() && !d2.is_zero() && !d3.is_zero())
        out.lambda = -(lin(p, 1, -1) * psi) / (d1 * d2 * d3);
    return out;
}

}  // namespace

CurvePoint curve_C(long n, long m, const std::string& p) {
    check_curve_label('C', n, m);
    return curve_impl(n, -m, p);
}

CurvePoint curve_D(long n, long m, const std::string& p) {
    check_curve_label('D', n, m);
    return curve_impl(n, m, p);
}

namespace {

CurvePoint curve_any(char family, long n, long m, const std::string& p) {
    return family == 'C' ? curve_C(n, m, p) : curve_D(n, m, p);
}

CheckLine compare(const std::string& name, const RatFunc& a, const RatFunc& b) {
    CheckLine line{name, a == b, ""};
    if (!line.pass) line.detail = "difference = " + (a - b).str();
    return line;
}

}  // namespace

CheckReport verify_triality(long n, long m, const std::string& p) {
    if (n < m || m < 0) throw std::invalid_argument("verify_triality needs n >= m >= 0");
    CheckReport rep;
    RatFunc psi = RatFunc::variable(p);
    RatFunc inv_psi = rf_const(p, 1) / psi;
    RatFunc psi_prime = psi / lin(p, 1, -1);  // 1/psi + 1/psi' = 1
    CurvePoint d_nm = curve_any('D', n, m, p);
    CurvePoint c_sub = curve_any('C', n - m, m, p);
    CurvePoint d_swap = curve_any('D', m, n, p);
    auto lambda_check = [&](const std::string& name, const std::optional<RatFunc>& a,
                            const std::optional<RatFunc>& b,
                            const RatFunc& sub) {
        if (!a && !b) {
            rep.checks.push_back({name + " (undefined at this label)", true, ""});
            return;
        }
        if (!a || !b) {
            rep.checks.push_back({name, false, "lambda defined on one side only"});
            return;
        }
        rep.checks.push_back(compare(name, *a, b->substitute(sub)));
    };
    rep.checks.push_back(
        compare("c: D(n,m)(psi) = C(n-m,m)(1/psi)", d_nm.c, c_sub.c.substitute(inv_psi)));
    lambda_check("lambda: D(n,m)(psi) = C(n-m,m)(1/psi)", d_nm.lambda, c_sub.lambda, inv_psi);
    rep.checks.push_back(
        compare("c: D(n,m)(psi) = D(m,n)(psi')", d_nm.c, d_swap.c.substitute(psi_prime)));
    lambda_check("lambda: D(n,m)(psi) = D(m,n)(psi')", d_nm.lambda, d_swap.lambda, psi_prime);
    return rep;
}

CoincidenceResult intersection_with_principal(long n, long m, long s) {
    if (s < 3 || m < 1) throw std::invalid_argument("need s >= 3 and m >= 1");
    if (n == 0) throw std::invalid_argument("parametrization pole: n = 0");
    CoincidenceResult out;
    out.psi_star = frac(m + n + s, n);
    out.c_star = Rational(-(s - 1)) * Rational(n * s - m - s) * Rational(m + n + s + n * s) /
                 (Rational(m + s) * Rational(m + n + s));
    out.lambda_star = Rational(m + s) * Rational(m + n + s) /
                      (Rational(s - 2) * Rational(2 * m + 2 * s - n * s) *
                       Rational(2 * m + 2 * n + 2 * s + n * s));
    CurvePoint coset = curve_C(n, m);
    if (!coset.lambda) throw std::invalid_argument("lambda undefined at this label");
    auto check_val = [&](const std::string& name, const RatFunc& f, const Rational& at,
                         const Rational& want) {
        CheckLine line{name, false, ""};
        try {
            Rational got = f.eval_at(at);
            line.pass = got == want;
            if (!line.pass) line.detail = "got " + rat_str(got) + ", want " + rat_str(want);
        } catch (const std::exception& e) {
            line.detail = e.what();
        }
        out.report.checks.push_back(line);
    };
    check_val("c: curve_C(n,m)(psi*) = c*", coset.c, out.psi_star, out.c_star);
    check_val("lambda: curve_C(n,m)(psi*) = lambda*", *coset.lambda, out.psi_star,
              out.lambda_star);
    // the same point on the principal curve, at the critically shifted level
    Rational psi_pr = frac(m + s, m + n + s);
    CurvePoint prin = curve_C(s, 0);
    if (!prin.lambda) throw std::invalid_argument("lambda undefined on the principal curve");
    check_val("c: curve_C(s,0)(r+s) = c*", prin.c, psi_pr, out.c_star);
    check_val("lambda: curve_C(s,0)(r+s) = lambda*", *prin.lambda, psi_pr, out.lambda_star);
    return out;
}

namespace {

struct BootstrapContext {
    std::string p;
    long n, m;
    RatFunc c, K, pole1, pole2;  // pole1 = m(psi-1), pole2 = m(n psi - m - n)
};

BootstrapContext make_context(long n, long m, const std::string& p) {
    if (m < 1 || n < 0) throw std::invalid_argument("bootstrap needs m >= 1, n >= 0");
    BootstrapContext ctx{p, n, m, curve_C(n, m, p).c, RatFunc(), RatFunc(), RatFunc()};
    ctx.pole1 = lin(p, m, -m);               // m(psi - 1)
    ctx.pole2 = lin(p, m * n, -m * (m + n));  // m(n psi - m - n)
    ctx.K = rf_const(p, n) - rf_const(p, m * m - 1) / ctx.pole1 -
            rf_const(p, m + n) / ctx.pole2;
    return ctx;
}

}  // namespace

BootstrapData bootstrap_alpha(long n, long m, const std::string& p) {
    BootstrapContext ctx = make_context(n, m, p);
    const RatFunc one = rf_const(p, 1);
    RatFunc k1 = one + ctx.K;
    // with a3 = 1:
    //   -3 a0 + (1+K) a1                      = 0
    //   -6 a0 + (2(1+K) + c/2) a2             = -3 (1+K)
    //   -4 a1 + 3 a2                          = -(4 + 2K)
    // solved by direct elimination
    RatFunc c_half = ctx.c / rf_const(p, 2);
    // a0 = (1+K) a1 / 3 and a1 = (3 a2 + 4 + 2K) / 4 reduce the system to one
    // equation in a2
    RatFunc four_two_k = rf_const(p, 4) + rf_const(p, 2) * ctx.K;
    // -2(1+K)(3 a2 + 4 + 2K)/4 + (2(1+K)+c/2) a2 = -3(1+K)
    RatFunc lhs_a2 = rf_const(p, 2) * k1 + c_half - k1 * rf_const(p, 3) / rf_const(p, 2);
    RatFunc rhs = k1 * four_two_k / rf_const(p, 2) - rf_const(p, 3) * k1;
    if (lhs_a2.is_zero()) throw std::domain_error("singular system: zero determinant");
    BootstrapData out;
    out.K = ctx.K;
    out.alpha2 = rhs / lhs_a2;
    out.alpha1 = (rf_const(p, 3) * out.alpha2 + four_two_k) / rf_const(p, 4);
    out.alpha0 = k1 * out.alpha1 / rf_const(p, 3);
    // residuals of the three constraints
    RatFunc r1 = rf_const(p, -3) * out.alpha0 + k1 * out.alpha1;
    RatFunc r2 = rf_const(p, -6) * out.alpha0 +
                 (rf_const(p, 2) * out.alpha2 + rf_const(p, 3)) * k1 + out.alpha2 * c_half;
    RatFunc r3 = rf_const(p, -4) * out.alpha1 + rf_const(p, 3) * out.alpha2 + four_two_k;
    out.report.checks.push_back({"residual of the first constraint", r1.is_zero(), r1.str()});
    out.report.checks.push_back({"residual of the second constraint", r2.is_zero(), r2.str()});
    out.report.checks.push_back({"residual of the third constraint", r3.is_zero(), r3.str()});
    // the printed closed forms
    RatFunc printed_a2 = -(rf_const(p, 2) * RatFunc::variable(p)) /
                         (lin(p, 1, -1) * lin(p, n, -m - n));
    RatFunc printed_a1 =
        (lin(p, n, -m - n - 2) * lin(p, n + 2, -m - n)) /
        (rf_const(p, 2) * lin(p, 1, -1) * lin(p, n, -m - n));
    RatFunc printed_a0 = (lin(p, n, -m - n - 2) * lin(p, n, -m - n - 1) * lin(p, n + 1, -m - n) *
                          lin(p, n + 2, -m - n)) /
                         (rf_const(p, 6) * lin(p, 1, -1) * lin(p, 1, -1) * lin(p, n, -m - n) *
                          lin(p, n, -m - n));
    out.report.checks.push_back(compare("a2 matches the printed ratio", out.alpha2, printed_a2));
    out.report.checks.push_back(compare("a1 matches the printed ratio", out.alpha1, printed_a1));
    out.report.checks.push_back(compare("a0 matches the printed ratio", out.alpha0, printed_a0));
    return out;
}

BootstrapData bootstrap_lambda(long n, long m, const std::string& p) {
    BootstrapContext ctx = make_context(n, m, p);
    BootstrapData out = bootstrap_alpha(n, m, p);
    const RatFunc one = rf_const(p, 1);
    RatFunc k1 = one + ctx.K;
    // 1 + K + 3 a0 a1 A - b0 = 0  and  1 + K + 6 a0 (a2 + 2) A - 2 b0 = 0,
    // linear in (A, b0) with A = a3^2
    RatFunc pivot = rf_const(p, 6) * out.alpha0 * (out.alpha1 - out.alpha2 - rf_const(p, 2));
    if (pivot.is_zero()) throw std::domain_error("elimination degenerates: zero pivot for a3^2");
    out.a3_sq = -k1 / pivot;
    out.b0 = k1 + rf_const(p, 3) * out.alpha0 * out.alpha1 * out.a3_sq;
    // substitute b1 from the fourth constraint into the third and solve for
    // the shared lambda combination X = (32/5)(2+c) lambda - 16; the factor
    // 32/5 normalizes the weight-5 structure constants and is pinned by the
    // lambda-reproduction endpoint at one label, then cross-checked on the rest
    RatFunc coef_b0 = rf_const(p, 8) * out.alpha1 - rf_const(p, 20) -
                      rf_const(p, 8) * out.alpha2;
    RatFunc extra =
        -out.alpha2 * rf_const(p, 3) * ctx.c -
        rf_const(p, 8) * out.alpha2 *
            lin(p, m * n + m, -(m * m + m * n + m - 1)) / ctx.pole1 +
        rf_const(p, 8) * out.alpha2 * rf_const(p, m + n) / ctx.pole2;
    RatFunc x_coeff = rf_const(p, 5) * out.alpha0 / rf_const(p, 2);
    if (x_coeff.is_zero()) throw std::domain_error("elimination degenerates: zero pivot for lambda");
    RatFunc X = (coef_b0 * out.b0 + extra) / x_coeff;
    RatFunc two_c = rf_const(p, 2) + ctx.c;
    if (two_c.is_zero()) throw std::domain_error("elimination degenerates: c = -2 identically");
    out.lambda = (X + rf_const(p, 16)) * rf_const(p, 5) / (rf_const(p, 32) * two_c);
    out.b1_over_a3 = (rf_const(p, 8) * out.alpha1 * out.b0 - rf_const(p, 5) * out.alpha0 * X) /
                     rf_const(p, 2);
    out.report.checks.push_back(
        compare("lambda equals the printed curve", out.lambda, *curve_C(n, m, p).lambda));
    // re-check the first constraint with the solved values
    RatFunc j1 = k1 + rf_const(p, 3) * out.alpha0 * out.alpha1 * out.a3_sq - out.b0;
    out.report.checks.push_back({"first Jacobi residual", j1.is_zero(), j1.str()});
    RatFunc j2 = k1 +
                 rf_const(p, 6) * out.alpha0 * (out.alpha2 + rf_const(p, 2)) * out.a3_sq -
                 rf_const(p, 2) * out.b0;
    out.report.checks.push_back({"second Jacobi residual", j2.is_zero(), j2.str()});
    return out;
}

RatFunc coset_central_charge(char family, long n, long m, const std::string& p) {
    if (family != 'C' && family != 'D') throw std::invalid_argument("family must be C or D");
    if (n < 0 || m < 0) throw std::invalid_argument("invalid label");
    if (n == 0 && m == 0) return rf_const(p, 0);  // the trivial coset
    return curve_any(family, n, m, p).c;
}

CheckReport bcd_parameter_consistency(const std::string& p) {
    CheckReport rep;
    RatFunc psi = RatFunc::variable(p);
    auto involution = [&](const std::string& name, const RatFunc& f) {
        rep.checks.push_back(compare(name, f.substitute(f), psi));
    };
    RatFunc m2 = psi / lin(p, 2, -1);        // 1/psi + 1/psi'' = 2
    RatFunc m1 = psi / lin(p, 1, -1);        // 1/psi + 1/psi'' = 1
    RatFunc inv = rf_const(p, 1) / psi;      // psi' = 1/psi
    RatFunc q4 = rf_const(p, 1) / (rf_const(p, 4) * psi);  // psi' = 1/(4 psi)
    RatFunc h2 = rf_const(p, 1) / (rf_const(p, 2) * psi);  // psi' = 1/(2 psi)
    involution("2b2b2o: 1/psi + 1/psi'' = 2 is an involution", m2);
    involution("2b2b2o: psi -> 1/(4 psi) round-trips through the 2O side", q4);
    involution("1c1c2c: psi -> 1/(2 psi) round-trips", h2);
    involution("1c1c2c: 1/psi + 1/psi'' = 1 is an involution", m1);
    involution("1o1b2d: psi -> 1/psi is an involution", inv);
    // closed parameter cycle around the 1c1c2c triangle
    RatFunc around = m1.substitute(m1.substitute(h2.substitute(h2)));
    rep.checks.push_back(compare("1c1c2c: the parameter triangle closes", around, psi));
    // the cross chain 2d1d1o -> 1o1b2d returns to the start:
    //   psi'' of 2d1d1o is 2 psi/(2 psi - 1); psi'' of 1o1b2d is psi/(2(psi-1))
    RatFunc v3 = (rf_const(p, 2) * psi) / lin(p, 2, -1);
    RatFunc v4 = psi / (rf_const(p, 2) * lin(p, 1, -1));
    rep.checks.push_back(
        compare("2d1d1o then 1o1b2d returns the parameter", v4.substitute(v3), psi));
    rep.checks.push_back(
        compare("1o1b2d then 2d1d1o returns the parameter", v3.substitute(v4), psi));
    return rep;
}

}  // namespace voa
