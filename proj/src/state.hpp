#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"  // Weight2
#include "scalar.hpp"

namespace voa {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// One factor d^dz(g) of a normally ordered word.
struct Factor {
    int gen = 0;
    int dz = 0;
    auto operator<=>(const Factor&) const = default;
};

// A PBW word: factors sorted by generator index, derivative orders weakly
// decreasing within an even generator and strictly decreasing within an odd
// one. The empty word is the vacuum.
using Word = std::vector<Factor>;

// Exact linear combination of PBW words; the universal value type.
class State {
public:
    State() = default;
    explicit State(AlgebraPtr alg) : alg_(std::move(alg)) {}
    State(AlgebraPtr alg, Word w, Scalar c = Scalar(1));
    static State vacuum(AlgebraPtr alg) { return State(std::move(alg), Word{}); }

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;
    Scalar vacuum_coeff() const { return coeff(Word{}); }

    void add_term(const Word& w, const Scalar& c);

    State operator-() const;
    State operator+(const State& o) const;
    State operator-(const State& o) const;
    State operator*(const Scalar& c) const;
    State& operator+=(const State& o);
    State& operator-=(const State& o);
    bool operator==(const State& o) const { return terms_ == o.terms_; }

    // Weight of a homogeneous state (nullopt when mixed); zero state has any
    // weight and reports nullopt as well.
    std::optional<Weight2> weight2() const;
    std::optional<int> parity() const;  // 0 even, 1 odd, nullopt if mixed

    std::string str() const;

private:
    AlgebraPtr alg_;
    std::map<Word, Scalar> terms_;
};

}  // namespace voa
