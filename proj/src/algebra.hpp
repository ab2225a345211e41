#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "state.hpp"

namespace voa {

enum class Parity { even = 0, odd = 1 };

struct GeneratorDecl {
    std::string name;
    Parity parity = Parity::even;
    Weight2 weight2 = 2;  // strictly positive
};

struct BracketTerm {
    int gen = 0;
    int dz = 0;
    Scalar coeff;
};

// Right-hand side of a_(j) b: a linear combination of generator derivatives
// plus a central multiple of the vacuum.
struct BracketRhs {
    std::vector<BracketTerm> terms;
    Scalar central = Scalar(0);
    bool is_zero() const { return terms.empty() && central.is_zero(); }
};

// Linear Lie conformal data: generators and the bracket table a_(j) b for
// j >= 0. Omitted entries are zero. Either direction of a pair may be given;
// the missing one is derived by skew-symmetry and cross-checked.
struct LieConformalSpec {
    std::vector<GeneratorDecl> generators;
    FieldDesc field;
    std::map<std::tuple<int, int, long>, BracketRhs> brackets;

    void set_bracket(int a, int b, long j, BracketRhs rhs);
};

// Extra data carried by affine-type builtins, needed for the Sugawara vector.
struct AffineData {
    std::vector<std::vector<Rational>> form;                 // invariant form B_ab
    std::vector<std::vector<std::vector<Rational>>> structure;  // f[a][b] -> coeffs
    Scalar level;
};

struct BuiltinInfo {
    std::string kind;  // "heisenberg", "beta_gamma", ... ; "custom" otherwise
    int n = 0;
    int k = 0;
    std::optional<AffineData> affine;
};

// Universal enveloping vertex algebra of a linear Lie conformal spec. All
// products are computed on PBW states; generator-pair products are memoized
// per handle with single-assignment writes under a mutex.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    // Validates weight consistency, the locality bound, skew-symmetry of the
    // stored table (completing the missing direction), and the generator-level
    // Jacobi identities. Throws std::invalid_argument on violations.
    static AlgebraPtr build(LieConformalSpec spec, BuiltinInfo info = {});

    const LieConformalSpec& spec() const { return spec_; }
    const FieldDesc& field() const { return spec_.field; }
    const BuiltinInfo& builtin() const { return info_; }
    std::size_t num_generators() const { return spec_.generators.size(); }
    const GeneratorDecl& generator(int g) const { return spec_.generators[(std::size_t)g]; }
    std::optional<int> generator_index(const std::string& name) const;

    Weight2 weight2(const Word& w) const;
    int parity(const Word& w) const;
    bool is_pbw(const Word& w) const;

    State zero() const { return State(shared_from_this()); }
    State vacuum() const { return State::vacuum(shared_from_this()); }
    State gen_state(int g, int dz = 0) const;
    State make(const Word& w, Scalar c = Scalar(1)) const;
    Scalar scalar(const std::string& text) const { return Scalar::parse(text, spec_.field); }

    // Complete PBW basis of the given weight, in canonical order.
    std::vector<Word> basis_words(Weight2 w2) const;
    std::size_t graded_dimension(Weight2 w2) const { return basis_words(w2).size(); }

    // --- products (engine.cpp) ---
    State prod_words(const Word& m, long n, const Word& w) const;
    State prod_states(const State& a, long n, const State& b) const;
    State derivative_word(const Word& w) const;
    // Right-nested Wick product of an arbitrary factor sequence.
    State normalize_sequence(const std::vector<Factor>& seq) const;
    // Independent reduction path through skew-symmetry, for cross-checks.
    State prod_via_skew(const State& a, long n, const State& b) const;

    const BracketRhs* bracket(int a, int b, long j) const;

private:
    Algebra(LieConformalSpec spec, BuiltinInfo info)
        : spec_(std::move(spec)), info_(std::move(info)) {}
    void complete_and_validate();
    void validate_jacobi() const;

    State single_pos(Factor f, long n, const Word& w) const;
    State single_pos_single(Factor f, long n, Factor h) const;
    State wick_insert(Factor f, const Word& w) const;
    State wick_factor_state(Factor f, const State& x) const;
    State prod_state_word(const State& x, long n, const Word& w) const;
    State bracket_state(int a, long j, int b) const;

    LieConformalSpec spec_;
    BuiltinInfo info_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::tuple<int, int, long, int, int>, State> memo_;
};

// --- free-function surface over the engine ---

State nth_product(const State& a, long n, const State& b);
State wick(const State& a, const State& b);
State iterated_wick(const std::vector<State>& xs);
State derivative(const State& a, long times = 1);

struct GramResult {
    std::vector<Word> basis;
    std::vector<std::vector<Scalar>> gram;
    Scalar det;
};
// Shapovalov pairing <e_i, e_j> at the given weight: the vacuum coefficient
// of (e_i)_(2w-1) e_j, with the mode index taken in the doubled convention.
GramResult shapovalov_gram(const AlgebraPtr& h, Weight2 w2);

}  // namespace voa
