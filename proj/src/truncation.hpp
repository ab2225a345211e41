#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace voa {

// Truncation-curve parametrization (c(psi), lambda(psi)). At the extreme
// labels with no weight-3 generator (e.g. C(2,0), the Virasoro algebra) the
// lambda denominator vanishes identically and lambda is undefined.
struct CurvePoint {
    RatFunc c;
    std::optional<RatFunc> lambda;
};

// The explicit parametrizations of the type-A coset curves. Valid labels:
// family C needs m >= 1, n >= 0, or m = 0, n >= 3; family D needs m >= 1,
// n >= 1, or m = 0, n >= 3. Degenerate labels are accepted for central
// charge queries only.
CurvePoint curve_C(long n, long m, const std::string& param = "psi");
CurvePoint curve_D(long n, long m, const std::string& param = "psi");

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// D(n,m)(psi) = C(n-m,m)(1/psi) = D(m,n)(psi/(psi-1)), exactly in psi.
CheckReport verify_triality(long n, long m, const std::string& param = "psi");

struct CoincidenceResult {
    Rational psi_star, c_star, lambda_star;
    CheckReport report;
};
// Intersection of the (n,m) coset curve with the weight-s principal curve.
CoincidenceResult intersection_with_principal(long n, long m, long s);

// The three structure-constant ratios a_i/a_3 forced by the first three
// Jacobi constraints, solved exactly and checked against the printed forms.
struct BootstrapData {
    RatFunc alpha0, alpha1, alpha2;
    RatFunc K;  // the recurring correction term
    RatFunc a3_sq, b0, b1_over_a3, lambda;
    CheckReport report;
};
BootstrapData bootstrap_alpha(long n, long m, const std::string& param = "psi");
// Full elimination: solves for (a_3^2, b_0), substitutes b_1, recovers
// lambda, and verifies it equals the printed curve parametrization.
BootstrapData bootstrap_lambda(long n, long m, const std::string& param = "psi");

RatFunc coset_central_charge(char family, long n, long m, const std::string& param = "psi");

// Exact consistency of the parameter maps in the B/C/D triality families.
CheckReport bcd_parameter_consistency(const std::string& param = "psi");

}  // namespace voa
