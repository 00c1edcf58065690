#include "nmr/selfcheck.hpp"

#include <cmath>

#include "nmr/prng.hpp"
#include "nmr/voter.hpp"

namespace nmr {

DetectionReport transitivity_scan(const EqualityMatrix& matrix) {
  DetectionReport report;
  const std::size_t n = matrix.order();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const int ones = matrix.at(i, j) + matrix.at(i, k) + matrix.at(j, k);
        if (ones == 2) {
          report.violations.push_back({i, j, k});
        }
      }
    }
  }
  report.transitivity_err = !report.violations.empty();
  return report;
}

std::pair<EqualityMatrix, Violation> inject_violation(const EqualityMatrix& matrix,
                                                      std::uint64_t seed) {
  // All pairs living inside a class of size >= 3; the draw is uniform over
  // this set.
  std::vector<std::array<std::size_t, 3>> candidates;  // {lo, hi, witness}
  for (const auto& cls : connected_classes(matrix)) {
    if (cls.size() < 3) continue;
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        // Smallest class member distinct from the pair; size >= 3 guarantees one.
        std::size_t witness = cls.front();
        for (std::size_t w : cls) {
          if (w != cls[a] && w != cls[b]) {
            witness = w;
            break;
          }
        }
        candidates.push_back({cls[a], cls[b], witness});
      }
    }
  }
  if (candidates.empty()) {
    throw NoEligibleClassError();
  }

  std::mt19937_64 rng(seed);
  const auto& [lo, hi, witness] = candidates[uniform_below(rng, candidates.size())];

  EqualityMatrix corrupted = matrix;
  corrupted.set_pair(lo, hi, 0);

  Violation violation;
  violation.zero_lo = lo;
  violation.zero_hi = hi;
  std::array<std::size_t, 3> triple{lo, hi, witness};
  std::sort(triple.begin(), triple.end());
  violation.i = triple[0];
  violation.j = triple[1];
  violation.k = triple[2];
  return {std::move(corrupted), violation};
}

DetectionReport full_check(const EqualityMatrix& matrix, double tol) {
  DetectionReport report = transitivity_scan(matrix);
  for (double v : numeric_eigenvalues(matrix)) {
    if (std::abs(v - std::round(v)) > tol) {
      report.non_integer_eigenvalues.push_back(v);
    }
  }
  report.spectral_err = !report.non_integer_eigenvalues.empty();
  return report;
}

CampaignReport run_campaign(const CampaignConfig& config, double tol) {
  std::size_t class_total = 0;
  for (std::size_t f : config.classes) {
    if (f == 0) throw std::invalid_argument("campaign class sizes must be positive");
    class_total += f;
  }
  if (config.n == 0 || class_total > config.n) {
    throw std::invalid_argument("campaign requires 0 < sum(classes) <= n");
  }

  VoterInputSet inputs;
  inputs.values.assign(config.n, 0);
  inputs.active.assign(config.n, false);
  std::size_t pos = 0;
  for (std::size_t c = 0; c < config.classes.size(); ++c) {
    for (std::size_t r = 0; r < config.classes[c]; ++r, ++pos) {
      inputs.values[pos] = static_cast<Word>(c);
      inputs.active[pos] = true;
    }
  }

  const Voter voter;
  const EqualityMatrix matrix = voter.build_matrix(inputs);

  CampaignReport summary;
  summary.total = config.seeds.size();
  for (std::uint64_t seed : config.seeds) {
    CampaignCase item;
    item.seed = seed;
    try {
      auto [corrupted, violation] = inject_violation(matrix, seed);
      item.eligible = true;
      item.violation = violation;
      item.report = full_check(corrupted, tol);
      item.detected = item.report.transitivity_err && item.report.spectral_err;
      summary.injected += 1;
      summary.detected += item.detected ? 1 : 0;
    } catch (const NoEligibleClassError&) {
      item.eligible = false;
      summary.skipped += 1;
    }
    summary.cases.push_back(std::move(item));
  }
  summary.detection_rate =
      summary.injected == 0
          ? 0.0
          : static_cast<double>(summary.detected) / static_cast<double>(summary.injected);
  return summary;
}

}  // namespace nmr
