#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace voa {

struct VirasoroVector {
    State L;
    Scalar c;
};

// Central charge of a state satisfying the Virasoro OPE; validation failures
// throw std::domain_error("not a conformal vector: ...") with the failing
// product as witness.
Scalar central_charge(const State& L);

// The standard conformal vector of a builtin handle. lambda deforms the
// weights of beta-gamma and bc systems (default 1/2).
VirasoroVector standard_virasoro(const AlgebraPtr& h,
                                 std::optional<Rational> lambda = std::nullopt);

// Sugawara vector of an affine builtin; throws on critical level.
VirasoroVector sugawara(const AlgebraPtr& h, const Rational& h_vee);

struct PrimaryReport {
    bool primary = false;
    Scalar weight;
    std::string witness;  // failing product when not primary
};
PrimaryReport is_primary(const VirasoroVector& vir, const State& a);

// Data of eq-style W-algebra central charge evaluation.
struct WAlgCharacterData {
    long sdim_g = 0;
    Rational h_vee;
    Scalar level;
    Rational x_norm;  // (x|x)
    std::vector<std::pair<Rational, Parity>> plus_part;  // (m_alpha, parity)
    long sdim_g_half = 0;
};
Scalar walg_central_charge(const WAlgCharacterData& d);

}  // namespace voa
