#pragma once

#include <map>
#include <vector>

#include "poly.hpp"

namespace voa {

// Weighted presentation R = Q[y_1..y_r] / (f_1..f_k).
struct Presentation {
    PolyRingPtr ring;
    std::vector<Poly> relations;
};

struct JetPresentation {
    Presentation source;
    long m = 0;
    Presentation jet;              // variables <y>_<i>, relations D^s f_l
    std::vector<Poly> var_images;  // the derivation D on the jet ring
};

// The m-th jet presentation: D(y_j_i) = y_j_{i+1} for i < m, D(y_j_m) = 0,
// relations D^s f for 0 <= s <= m. Jet variables carry weight wt(y) + i; pass
// zero_base to use the bare arc-space convention wt(y_i) = i instead.
JetPresentation jet_presentation(const Presentation& p, long m, bool zero_base = false);

using GradedDims = std::map<Weight2, std::size_t>;

// Exact graded dimensions of the quotient up to maxweight2, by row reduction
// of { monomial x relation } inside each finite weight piece. Every variable
// weight must be positive.
GradedDims truncated_hilbert(const Presentation& p, Weight2 maxweight2);

// Arc-ring dimensions under the weight cutoff: only variables and relation
// prolongations of weight <= maxweight2 are instantiated.
GradedDims arc_hilbert(const Presentation& p, Weight2 maxweight2);

std::vector<Poly::Expo> weighted_monomials(const PolyRingPtr& ring, Weight2 w2);

}  // namespace voa
