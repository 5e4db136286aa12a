#pragma once

// JSON views of the library's results. Every rational value is written as a
// string so that arbitrary precision survives the round trip.

#include <string>
#include <vector>

#include "halfturn/constructions.hpp"
#include "halfturn/maps.hpp"
#include "halfturn/symbolic.hpp"
#include "halfturn/verify.hpp"

namespace halfturn {

/// Flat object: point name -> "p:q:r", in construction order. Points that do
/// not exist for this P (R, R', M, M', H_a, ...) are omitted.
std::string to_json(const Configuration& cfg, int indent = 2);

/// Array of 9 rational strings, row-major.
std::string to_json(const Map3& m, int indent = -1);

/// {p, claims: [{id, pass, witness?}], pass}
std::string to_json(const VerifyReport& r, int indent = 2);
std::string to_json(const std::vector<VerifyReport>& rs, int indent = 2);

/// {theorem, identities: [{label, degree, vanishes}], status}
std::string to_json(const symbolic::ProofReport& r, int indent = 2);
std::string to_json(const std::vector<symbolic::ProofReport>& rs, int indent = 2);

}  // namespace halfturn
