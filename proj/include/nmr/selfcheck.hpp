#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "nmr/spectral.hpp"
#include "nmr/types.hpp"

namespace nmr {

/// A planted transitivity violation: the symmetric pair (zero_lo, zero_hi)
/// was zeroed inside a class of size >= 3, and (i, j, k) is the sorted triple
/// made of that pair plus a witness member still connected to both.
struct Violation {
  std::size_t i = 0, j = 0, k = 0;
  std::size_t zero_lo = 0, zero_hi = 0;
};

struct DetectionReport {
  bool transitivity_err = false;
  bool spectral_err = false;
  std::vector<std::array<std::size_t, 3>> violations;  // sorted triples, lexicographic
  std::vector<double> non_integer_eigenvalues;
};

/// O(N^3) scan of all triples i < j < k; a triple violates transitivity when
/// exactly two of its three pair bits are set. Every violating triple is
/// recorded, not just the first, and the order never depends on scheduling.
DetectionReport transitivity_scan(const EqualityMatrix& matrix);

/// Copy of the matrix with one symmetric pair inside a class of size >= 3
/// zeroed, chosen uniformly over all such pairs by the seeded generator.
/// Throws NoEligibleClassError when every class is smaller than 3.
std::pair<EqualityMatrix, Violation> inject_violation(const EqualityMatrix& matrix,
                                                      std::uint64_t seed);

/// Both independent checks on one matrix: the transitivity scan and the
/// eigenvalue integrality check.
DetectionReport full_check(const EqualityMatrix& matrix,
                           double tol = kDefaultIntegralityTol);

/// Injection campaign: one canonical input set shaped by `classes` (class i
/// occupies the next classes[i] positions with value i; positions beyond the
/// class total up to n are inactive), injected once per seed.
struct CampaignConfig {
  std::size_t n = 0;
  std::vector<std::size_t> classes;
  std::vector<std::uint64_t> seeds;
};

struct CampaignCase {
  std::uint64_t seed = 0;
  bool eligible = false;
  Violation violation;
  DetectionReport report;
  bool detected = false;  // both checkers flagged the injection
};

struct CampaignReport {
  std::size_t total = 0;
  std::size_t injected = 0;
  std::size_t detected = 0;
  std::size_t skipped = 0;
  double detection_rate = 0.0;
  std::vector<CampaignCase> cases;
};

CampaignReport run_campaign(const CampaignConfig& config,
                            double tol = kDefaultIntegralityTol);

}  // namespace nmr
