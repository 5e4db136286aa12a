#pragma once

// Exact checks of every claim over sampled P. There is no tolerance: a
// claim either holds as an integer identity or it fails.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halfturn/kernel.hpp"

namespace halfturn {

struct Claim {
  std::string id;
  bool pass = false;
  std::optional<std::string> witness;
};

struct VerifyReport {
  BaryPoint p;
  std::vector<Claim> claims;

  bool pass() const;
  void append(const VerifyReport& other);
};

/// Deterministic integer triples in [-bound, bound]^3 that pass validate_p.
/// Draws come from std::mt19937_64 with rejection sampling, so the sequence
/// is identical across platforms.
std::vector<BaryPoint> sample_valid_p(std::uint64_t seed, std::size_t count, long bound);

/// Fixed probes always run alongside random samples: points on the Steiner
/// circumellipse (P' infinite) and infinite P.
std::vector<BaryPoint> branch_probes();

VerifyReport verify_halfturn(const BaryPoint& p);
VerifyReport verify_section2(const BaryPoint& p);
VerifyReport verify_section3(const BaryPoint& p);
VerifyReport verify_all(const BaryPoint& p);

/// branch_probes() followed by sample_valid_p(seed, count, bound).
std::vector<VerifyReport> verify_random(std::uint64_t seed, std::size_t count, long bound);

}  // namespace halfturn
