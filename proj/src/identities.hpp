#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"

namespace voa {

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // first failing index set and difference, if any
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Verifies the five structural identities on the triple (a, b, c) for all
// index values bounded by nmax. Failures are reported, not thrown.
IdentityReport check_identities(const State& a, const State& b, const State& c, long nmax);

}  // namespace voa
