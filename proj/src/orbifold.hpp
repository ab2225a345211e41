#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace voa {

// Diagonal action of Z/d: generator i carries charge[i] mod d. A word is
// invariant iff its total charge vanishes mod d.
struct DiagonalAction {
    long modulus = 2;
    std::vector<long> charge;
};

// Validates that every bracket-table entry preserves charge; throws if not.
void validate_action(const AlgebraPtr& h, const DiagonalAction& act);
long word_charge(const AlgebraPtr& h, const DiagonalAction& act, const Word& w);
std::vector<Word> invariant_basis(const AlgebraPtr& h, const DiagonalAction& act, Weight2 w2);

// Reductive-group invariants: a list of infinitesimal generators acting on
// the generator span (extended as even derivations), optionally combined
// with finite diagonal components (e.g. the reflection in O(n)).
struct LinearAction {
    std::vector<std::vector<std::vector<Rational>>> lie;  // matrices: image[g] = sum_h m[h][g] h
    std::vector<DiagonalAction> diagonal;
};

// Derivation extension of a linear map on the generator span.
State apply_derivation(const AlgebraPtr& h, const std::vector<std::vector<Rational>>& m,
                       const State& s);
// Checks each lie matrix is a derivation of the bracket table.
void validate_linear_action(const AlgebraPtr& h, const LinearAction& act);
// Basis of the invariant subspace at the given weight.
std::vector<State> invariant_states(const AlgebraPtr& h, const LinearAction& act, Weight2 w2);

// The worked quadratic-invariant families.
enum class FamilyTag { SevSp, OoddO, SoddSp, OevO, SevGL, OevGL, SoddGL, OoddGL };
struct QuadraticFamily {
    FamilyTag tag;
    int n = 1;
    int k = 1;  // pole order
};
std::optional<FamilyTag> family_tag_from_string(const std::string& s);
AlgebraPtr family_algebra(const QuadraticFamily& fam);
// Ranges and normalizations follow the classification theorems exactly.
std::vector<State> omega_generators(const QuadraticFamily& fam, const AlgebraPtr& h);
LinearAction family_action(const QuadraticFamily& fam, const AlgebraPtr& h);

// --- decoupling -------------------------------------------------------------

// A word in the chosen generators: factors (generator index, derivative
// order), evaluated as the right-nested Wick product in the listed order.
using GenWord = std::vector<std::pair<int, int>>;

struct Relation {
    GenWord target;  // single letter, e.g. {(target_index, 0)}; informational
    std::vector<std::pair<GenWord, Scalar>> rhs;
    State target_state;
    State rhs_state;
};

std::string genword_str(const GenWord& w, const std::vector<std::string>& names);

// All generator words of the given weight (including single derivative
// letters), in graded order: fewer factors first, then lexicographic.
std::vector<GenWord> enumerate_genwords(const std::vector<Weight2>& gen_weights, Weight2 w2);
State eval_genword(const AlgebraPtr& h, const std::vector<State>& gens, const GenWord& w);

// Exact linear solve for target = sum c_i word_i over words in the
// generators and their derivatives at the target weight. Returned relations
// are re-verified by direct engine evaluation. Absence is a value.
std::optional<Relation> decouple(const AlgebraPtr& h, const std::vector<State>& gens,
                                 const State& target);

// Membership of the target weight space in the span of generator words.
struct StrongGenRow {
    Weight2 w2;
    std::size_t span_dim;
    std::size_t invariant_dim;
};
struct StrongGenReport {
    std::vector<StrongGenRow> rows;
    bool full_span = true;
};
StrongGenReport verify_strong_generation(const AlgebraPtr& h, const LinearAction& act,
                                         const std::vector<State>& gens, Weight2 maxweight2);

// --- the decoupling bootstrap ----------------------------------------------

// Walks the quadratic ladder w_{2m,0} of a rank-one even orbifold: applies
// pump_(1) to the previous target, expands in the derivative-letter basis
// {d^j w_{2m,0}}, checks the new target's coefficient is nonzero, and emits a
// verified decoupling relation for it. Per-step failures are reported.
struct BootstrapStep {
    int target_index;          // m of w_{2m,0}
    Scalar lead_coeff;         // coefficient of the new target in the expansion
    std::string pump_identity; // pump_(1) w_{2m-2,0} expanded in the ladder basis
    bool ok = false;
    std::string error;
    std::optional<Relation> relation;
};
std::vector<BootstrapStep> decouple_bootstrap(const AlgebraPtr& h,
                                              const std::vector<State>& gens, const State& pump,
                                              const Relation& start, int count);

// Expansion of an invariant state in the ladder basis {d^j w_{2m,0}};
// coefficients keyed by (m, j).
std::optional<std::map<std::pair<int, int>, Scalar>> ladder_expand(const AlgebraPtr& h,
                                                                   const State& s);

}  // namespace voa
