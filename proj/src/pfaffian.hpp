#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace voa {

// Classical Pfaffian relations and their quantum-correction coefficients.
// Lists carry full antisymmetry: repeated entries give zero, permutations
// contribute their sign.

PolyRingPtr pfaffian_ring(long max_index);

// The degree-(n+1) Pfaffian p_I over indeterminates Q_{a,b} = -Q_{b,a},
// expanded through the inductive formula.
Poly pfaffian(const std::vector<long>& I, const PolyRingPtr& ring = nullptr);

// Leading coefficient R_n(I) of the normally ordered Pfaffian relation:
// the closed product formula, and the recursion it was derived from.
Rational rn_closed(const std::vector<long>& I);
Rational rn_recursion(const std::vector<long>& I);

}  // namespace voa
