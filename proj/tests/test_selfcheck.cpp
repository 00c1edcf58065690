#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nmr/selfcheck.hpp"
#include "nmr/voter.hpp"
#include "oracles.hpp"

using nmr::EqualityMatrix;
using nmr::Voter;
using nmr::VoterInputSet;

namespace {

const Voter kVoter;

VoterInputSet all_active(std::vector<nmr::Word> values) {
  VoterInputSet inputs;
  inputs.active.assign(values.size(), true);
  inputs.values = std::move(values);
  return inputs;
}

// x0 = x1 = x2 != x3 with the (1,2) pair zeroed.
EqualityMatrix corrupted_isolated_pair() {
  EqualityMatrix matrix = kVoter.build_matrix(all_active({5, 5, 5, 8}));
  matrix.set_pair(1, 2, 0);
  return matrix;
}

// x0 = x1 = x3 != x2 with the (0,3) pair zeroed.
EqualityMatrix corrupted_three_of_four() {
  EqualityMatrix matrix = kVoter.build_matrix(all_active({5, 5, 8, 5}));
  matrix.set_pair(0, 3, 0);
  return matrix;
}

}  // namespace

TEST_CASE("transitivity scan lists every violating triple") {
  const auto report = nmr::transitivity_scan(corrupted_isolated_pair());
  CHECK(report.transitivity_err);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == std::array<std::size_t, 3>{0, 1, 2});

  const auto report_b = nmr::transitivity_scan(corrupted_three_of_four());
  CHECK(report_b.transitivity_err);
  REQUIRE(report_b.violations.size() == 1);
  CHECK(report_b.violations[0] == std::array<std::size_t, 3>{0, 1, 3});
}

TEST_CASE("freshly built matrices pass the transitivity scan") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 200; ++round) {
    const auto inputs = oracle::random_inputs(rng, 10, 3, true);
    const auto report = nmr::transitivity_scan(kVoter.build_matrix(inputs));
    CHECK_FALSE(report.transitivity_err);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("injection zeroes one symmetric pair inside a large class") {
  const auto matrix = kVoter.build_matrix(all_active({9, 9, 9, 9}));
  const auto [corrupted, violation] = nmr::inject_violation(matrix, 2024);

  CHECK(violation.i < violation.j);
  CHECK(violation.j < violation.k);
  CHECK(matrix.at(violation.zero_lo, violation.zero_hi) == 1);
  CHECK(corrupted.at(violation.zero_lo, violation.zero_hi) == 0);
  CHECK(corrupted.at(violation.zero_hi, violation.zero_lo) == 0);

  // All other entries untouched.
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (matrix.at(i, j) != corrupted.at(i, j)) ++diffs;
    }
  }
  CHECK(diffs == 2);

  // Re-setting the zeroed pair restores the original bit for bit.
  EqualityMatrix recovered = corrupted;
  recovered.set_pair(violation.zero_lo, violation.zero_hi, 1);
  CHECK(recovered == matrix);
}

TEST_CASE("injection is deterministic per seed") {
  const auto matrix = kVoter.build_matrix(all_active({1, 1, 1, 2, 2, 2, 3}));
  const auto [first, v1] = nmr::inject_violation(matrix, 77);
  const auto [second, v2] = nmr::inject_violation(matrix, 77);
  CHECK(first == second);
  CHECK(v1.zero_lo == v2.zero_lo);
  CHECK(v1.zero_hi == v2.zero_hi);
}

TEST_CASE("injection needs a class of at least three") {
  const auto matrix = kVoter.build_matrix(all_active({1, 1, 2, 2}));
  CHECK_THROWS_AS(nmr::inject_violation(matrix, 0), nmr::NoEligibleClassError);
  CHECK_THROWS_AS(nmr::inject_violation(EqualityMatrix(5), 0), nmr::NoEligibleClassError);
}

TEST_CASE("both checkers flag every seeded injection") {
  std::mt19937_64 rng(123);
  int injected = 0;
  for (std::uint64_t seed = 0; injected < 1000; ++seed) {
    const auto inputs = oracle::random_inputs(rng, 10, 3, false);
    const auto matrix = kVoter.build_matrix(inputs);
    try {
      const auto [corrupted, violation] = nmr::inject_violation(matrix, seed);
      const auto report = nmr::full_check(corrupted);
      REQUIRE(report.transitivity_err);
      REQUIRE(report.spectral_err);
      ++injected;
    } catch (const nmr::NoEligibleClassError&) {
      // smaller draws have no class of three; skip
    }
  }
}

TEST_CASE("full check reports both verdicts with evidence") {
  const auto report = nmr::full_check(corrupted_three_of_four());
  CHECK(report.transitivity_err);
  CHECK(report.spectral_err);
  REQUIRE(report.non_integer_eigenvalues.size() == 2);
  CHECK(report.non_integer_eigenvalues[0] ==
        doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(0).scale(1e-9));
  CHECK(report.non_integer_eigenvalues[1] ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(0).scale(1e-9));

  const auto clean = nmr::full_check(kVoter.build_matrix(all_active({20, 30, 20, 10})));
  CHECK_FALSE(clean.transitivity_err);
  CHECK_FALSE(clean.spectral_err);

  const auto identity = nmr::full_check(EqualityMatrix(6));
  CHECK_FALSE(identity.transitivity_err);
  CHECK_FALSE(identity.spectral_err);
}

TEST_CASE("exhaustive single-pair injections are always caught") {
  // Every proper matrix up to order 6, every pair inside a class of >= 3.
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& assign : oracle::set_partitions(n)) {
      const auto matrix = oracle::matrix_from_assignment(assign);
      const std::size_t m = 1 + *std::max_element(assign.begin(), assign.end());
      const auto classes = nmr::connected_classes(matrix);

      std::size_t ones_classes = 0;
      for (const auto& cls : classes) {
        if (cls.size() == 1) ++ones_classes;
      }

      for (const auto& cls : classes) {
        if (cls.size() < 3) continue;
        const double f = static_cast<double>(cls.size());
        const double disc = std::sqrt(f * f + 2 * f - 7);
        for (std::size_t a = 0; a < cls.size(); ++a) {
          for (std::size_t b = a + 1; b < cls.size(); ++b) {
            EqualityMatrix corrupted = matrix;
            corrupted.set_pair(cls[a], cls[b], 0);

            CHECK(nmr::transitivity_scan(corrupted).transitivity_err);
            CHECK(nmr::spectral_selfcheck(corrupted));

            const auto numeric = nmr::numeric_eigenvalues(corrupted);
            std::vector<double> non_integers;
            std::size_t zeros = 0;
            std::size_t ones = 0;
            for (double v : numeric) {
              if (std::abs(v - std::round(v)) > 1e-8) {
                non_integers.push_back(v);
              } else if (std::llround(v) == 0) {
                ++zeros;
              } else if (std::llround(v) == 1) {
                ++ones;
              }
            }
            REQUIRE(non_integers.size() == 2);
            CHECK(non_integers[0] == doctest::Approx((f - 1 - disc) / 2).epsilon(0).scale(1e-8));
            CHECK(non_integers[1] == doctest::Approx((f - 1 + disc) / 2).epsilon(0).scale(1e-8));
            CHECK(zeros == n - m - 2);
            CHECK(ones == ones_classes + 1);
          }
        }
      }
    }
  }
}

TEST_CASE("checkers agree on random matrices up to order 64") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 3 + nmr::uniform_below(rng, 62);
    VoterInputSet inputs;
    inputs.values.resize(n);
    inputs.active.assign(n, true);
    for (auto& v : inputs.values) v = nmr::uniform_below(rng, 4);
    const auto matrix = kVoter.build_matrix(inputs);

    const auto proper = nmr::full_check(matrix);
    CHECK(proper.transitivity_err == proper.spectral_err);

    try {
      const auto [corrupted, violation] = nmr::inject_violation(matrix, rng());
      const auto report = nmr::full_check(corrupted);
      CHECK(report.transitivity_err);
      CHECK(report.transitivity_err == report.spectral_err);
    } catch (const nmr::NoEligibleClassError&) {
    }
  }
}

TEST_CASE("campaigns summarize detection over seeds") {
  nmr::CampaignConfig config;
  config.n = 4;
  config.classes = {3, 1};
  for (std::uint64_t seed = 0; seed < 100; ++seed) config.seeds.push_back(seed);

  const auto report = nmr::run_campaign(config);
  CHECK(report.total == 100);
  CHECK(report.injected == 100);
  CHECK(report.detected == 100);
  CHECK(report.skipped == 0);
  CHECK(report.detection_rate == 1.0);
  for (const auto& item : report.cases) {
    CHECK(item.eligible);
    CHECK(item.detected);
  }
}

TEST_CASE("campaigns without an eligible class skip gracefully") {
  nmr::CampaignConfig config;
  config.n = 4;
  config.classes = {1, 1, 1, 1};
  config.seeds = {1, 2, 3};
  const auto report = nmr::run_campaign(config);
  CHECK(report.injected == 0);
  CHECK(report.skipped == 3);
  for (const auto& item : report.cases) CHECK_FALSE(item.eligible);
}

TEST_CASE("campaign positions beyond the classes are inactive") {
  nmr::CampaignConfig config;
  config.n = 6;
  config.classes = {3, 1};
  config.seeds = {11, 12};
  const auto report = nmr::run_campaign(config);
  CHECK(report.injected == 2);
  CHECK(report.detected == 2);

  config.classes = {3, 4};  // sums past n
  CHECK_THROWS_AS(nmr::run_campaign(config), std::invalid_argument);
}
