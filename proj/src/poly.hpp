#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace voa {

// Weights are half-integers stored doubled, so grading arithmetic stays exact.
using Weight2 = long;

// Variable table of a weighted polynomial ring. Variable order is fixed at
// construction and shared by every polynomial of the ring.
class PolyRing {
public:
    struct Var {
        std::string name;
        Weight2 weight2 = 2;
    };

    explicit PolyRing(std::vector<Var> vars);
    static std::shared_ptr<const PolyRing> make(std::vector<Var> vars) {
        return std::make_shared<const PolyRing>(std::move(vars));
    }

    std::size_t size() const { return vars_.size(); }
    const Var& var(std::size_t i) const { return vars_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

private:
    std::vector<Var> vars_;
    std::map<std::string, std::size_t> index_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Sparse multivariate polynomial over the rationals; no zero coefficients
// are stored, exponent vectors are dense over the ring's variable table.
class Poly {
public:
    using Expo = std::vector<int>;

    Poly() = default;
    explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}
    static Poly constant(PolyRingPtr ring, Rational c);
    static Poly variable(PolyRingPtr ring, std::size_t index);
    // Grammar: +, -, *, ^, rational literals p/q, ring variables, parentheses.
    static Poly parse(PolyRingPtr ring, const std::string& text);

    const PolyRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rational>& terms() const { return terms_; }
    void add_term(const Expo& e, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(long e) const;
    bool operator==(const Poly& o) const;

    Weight2 term_weight2(const Expo& e) const;
    // Weight of a homogeneous polynomial; nullopt when mixed or zero.
    std::optional<Weight2> homogeneous_weight2() const;

    Poly partial(std::size_t var) const;
    // Derivation determined by images of the variables (Leibniz extension).
    Poly apply_derivation(const std::vector<Poly>& var_images) const;
    // Ring morphism renaming/mapping each variable to a target-ring variable.
    Poly map_variables(PolyRingPtr target, const std::vector<std::size_t>& image) const;

    std::string str() const;

private:
    PolyRingPtr ring_;
    std::map<Expo, Rational> terms_;
};

}  // namespace voa
