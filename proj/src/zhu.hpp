#pragma once

#include <variant>
#include <vector>

#include "algebra.hpp"
#include "jets.hpp"
#include "orbifold.hpp"

namespace voa {

// Selects a vertex subalgebra to compute Zhu data in: the full algebra, the
// invariants of a diagonal action, or the strong-generation span of a list
// of states.
struct SelectorFull {};
struct SelectorDiagonal {
    DiagonalAction action;
};
struct SelectorGenerated {
    std::vector<State> gens;
};
using SubspaceSelector = std::variant<SelectorFull, SelectorDiagonal, SelectorGenerated>;

std::vector<State> subspace_basis(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 w2);

// Product closure of a generated selector, checked on the generating set up
// to maxweight2; throws with a witness if some a_(n)b escapes the span.
void validate_selector(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 maxweight2);

// dim of (subalgebra weight w) minus dim span{ a_(-2) b } at that weight.
GradedDims c2_graded_dims(const AlgebraPtr& h, const SubspaceSelector& sel, Weight2 maxweight2);

// True iff the image of expr in Zhu's commutative algebra vanishes.
bool relation_in_zhu(const AlgebraPtr& h, const SubspaceSelector& sel, const State& expr);

struct ProbeRow {
    Weight2 w2;
    std::size_t arc_dim;
    std::size_t voa_dim;
};
struct ProbeReport {
    std::vector<ProbeRow> rows;
    bool surjective_ok = true;  // arc >= voa is a theorem; a violation means a bug
    Weight2 first_strict = -1;  // first weight where arc > voa, -1 if none
};
// Compares the arc ring of the supplied presentation of R against the graded
// dimensions of the selected subalgebra.
ProbeReport classical_freeness_probe(const AlgebraPtr& h, const SubspaceSelector& sel,
                                     const Presentation& R, Weight2 maxweight2);

}  // namespace voa
