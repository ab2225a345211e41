#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"

namespace voa {

AlgebraPtr heisenberg(int n);
AlgebraPtr heisenberg_degenerate(int n);  // zero brackets: the abelian contrast algebra
AlgebraPtr heisenberg_pairs(int n);       // pairs x_i, y_i with x_i (1) y_i = 1
AlgebraPtr free_fermion(int n);
AlgebraPtr beta_gamma(int n);
AlgebraPtr bc_system(int n);
AlgebraPtr symplectic_fermion(int n);
AlgebraPtr o_ev(int n, int k);   // k even >= 2; k = 2 is heisenberg(n)
AlgebraPtr o_odd(int n, int k);  // k odd >= 1; k = 1 is free_fermion(n)
AlgebraPtr s_ev(int n, int k);   // k odd >= 1; k = 1 is beta_gamma(n)
AlgebraPtr s_odd(int n, int k);  // k even >= 2; k = 2 is symplectic_fermion(n)
// Orthogonal-type algebras in a hyperbolic (paired) basis, the form GL(n)
// orbifolds need: e_i (k-1) f_j = delta_ij with a symmetric pairing.
AlgebraPtr o_ev_pairs(int n, int k);   // k even >= 2; k = 2 is heisenberg_pairs(n)
AlgebraPtr o_odd_pairs(int n, int k);  // k odd >= 1; k = 1 is bc_system(n)
AlgebraPtr virasoro(const Scalar& c, const FieldDesc& field = FieldDesc::rational());

// Universal affine algebra over an arbitrary homogeneous basis. form is the
// invariant bilinear form, structure[a][b] the coefficients of [a,b] in the
// basis. Validation rejects non-invariant or non-Jacobi data.
AlgebraPtr affine(const std::vector<std::string>& names,
                  std::vector<std::vector<Rational>> form,
                  std::vector<std::vector<std::vector<Rational>>> structure, const Scalar& level,
                  const FieldDesc& field);
AlgebraPtr affine_sl2(const Scalar& level, const FieldDesc& field);

// One-parameter family with orthonormal second-order poles and first-order
// poles scaled by 1/parameter; totally antisymmetric structure constants.
AlgebraPtr deformable_affine(std::vector<std::vector<std::vector<Rational>>> structure,
                             const std::string& param);
AlgebraPtr deformable_affine_sl2(const std::string& param = "kappa");

// Builtin lookup for the CLI: "heisenberg:2", "sev:1:3", "virasoro:1/2",
// "virasoro:c" (symbolic), "affine:sl2:k", "deformable:sl2", ...
AlgebraPtr standard_algebra(const std::string& name);

// kappa -> infinity limit of a family over rational functions.
struct LimitResult {
    AlgebraPtr limit;
    // coefficient-wise limit of a family state; throws on positive degree
    State map(const State& a) const;
};
LimitResult limit_infinity(const AlgebraPtr& h);

}  // namespace voa
