#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nmr/voter.hpp"
#include "oracles.hpp"

using nmr::EqualityMatrix;
using nmr::InputStateDescriptor;
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

std::vector<std::vector<int>> rows_of(const EqualityMatrix& matrix) {
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < matrix.order(); ++i) {
    std::vector<int> row;
    for (std::size_t j = 0; j < matrix.order(); ++j) row.push_back(matrix.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Every (values, active) combination for n inputs over a small alphabet,
// skipping the all-inactive masks.
template <typename Fn>
void for_each_input_set(std::size_t max_n, nmr::Word alphabet, Fn&& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<nmr::Word> values(n, 0);
    const std::size_t value_combos = [&] {
      std::size_t c = 1;
      for (std::size_t i = 0; i < n; ++i) c *= alphabet;
      return c;
    }();
    for (std::size_t vcode = 0; vcode < value_combos; ++vcode) {
      std::size_t rest = vcode;
      for (std::size_t i = 0; i < n; ++i) {
        values[i] = rest % alphabet;
        rest /= alphabet;
      }
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        VoterInputSet inputs;
        inputs.values = values;
        inputs.active.resize(n);
        for (std::size_t i = 0; i < n; ++i) inputs.active[i] = (mask >> i) & 1;
        fn(inputs);
      }
    }
  }
}

}  // namespace

TEST_CASE("matrix of the four-input reference example") {
  const auto matrix = kVoter.build_matrix(all_active({20, 30, 20, 10}));
  CHECK(rows_of(matrix) == std::vector<std::vector<int>>{
                               {1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}});
}

TEST_CASE("pairwise distinct inputs give the identity matrix") {
  const auto matrix = kVoter.build_matrix(all_active({4, 8, 15, 16}));
  CHECK(matrix == EqualityMatrix(4));
}

TEST_CASE("an inactive input is different from everything else") {
  VoterInputSet inputs;
  inputs.values = {7, 7, 7};
  inputs.active = {true, false, true};
  const auto matrix = kVoter.build_matrix(inputs);
  CHECK(rows_of(matrix) == std::vector<std::vector<int>>{{1, 0, 1}, {0, 1, 0}, {1, 0, 1}});
}

TEST_CASE("input set validation") {
  VoterInputSet inputs;
  CHECK_THROWS_AS(inputs.validate(), std::invalid_argument);
  inputs.values = {1, 2};
  inputs.active = {true};
  CHECK_THROWS_AS(inputs.validate(), std::invalid_argument);
}

TEST_CASE("word width masks high bits before comparing") {
  const Voter narrow(8);
  const auto matrix = narrow.build_matrix(all_active({0x1ff, 0x2ff, 0x0ff}));
  CHECK(matrix.at(0, 1) == 1);
  CHECK(matrix.at(0, 2) == 1);
  CHECK_THROWS_AS(Voter(0), std::invalid_argument);
  CHECK_THROWS_AS(Voter(65), std::invalid_argument);
}

TEST_CASE("reduced matrix keeps the upper triangle and zero-fills the rest") {
  const auto matrix = kVoter.build_matrix(all_active({20, 30, 20, 10}));
  const auto reduced = nmr::reduce_matrix(matrix);
  CHECK(reduced.order() == 3);
  CHECK(reduced.pretty() == "010\n000\n000\n");
  CHECK(reduced.fill_zero_count() == 3);
  CHECK(reduced.upper(0, 2) == 1);
  CHECK(reduced.upper(1, 2) == 0);

  const auto reduced_identity = nmr::reduce_matrix(EqualityMatrix(4));
  CHECK(reduced_identity.pretty() == "000\n000\n000\n");

  const auto all_ones = kVoter.build_matrix(all_active({3, 3, 3}));
  CHECK(nmr::reduce_matrix(all_ones).pretty() == "11\n01\n");

  CHECK_THROWS_AS(nmr::reduce_matrix(EqualityMatrix(1)), nmr::NotReducibleError);
}

TEST_CASE("frequency profile of the reference example") {
  const auto profile = kVoter.frequency_profile(all_active({20, 30, 20, 10}));
  CHECK(profile.m() == 3);
  CHECK(profile.frequencies() == std::vector<std::size_t>{2, 1, 1});
  CHECK(profile.classes[0].value == 20);
  CHECK(profile.classes[0].members == std::vector<std::size_t>{0, 2});
}

TEST_CASE("frequency profile edge cases") {
  const auto single = kVoter.frequency_profile(all_active({9, 9, 9, 9, 9}));
  CHECK(single.m() == 1);
  CHECK(single.max_frequency() == 5);

  VoterInputSet inputs;
  inputs.values = {5, 5, 9, 9};
  inputs.active = {true, true, true, false};
  const auto profile = kVoter.frequency_profile(inputs);
  CHECK(profile.m() == 2);
  CHECK(profile.frequencies() == std::vector<std::size_t>{2, 1});
  CHECK(profile.classes[0].value == 5);
  CHECK(profile.classes[1].value == 9);
  CHECK(profile.classes[1].members == std::vector<std::size_t>{2});

  inputs.active = {false, false, false, false};
  CHECK_THROWS_AS(kVoter.frequency_profile(inputs), nmr::ZeroActiveError);
  CHECK_THROWS_AS(kVoter.compute_isd(inputs), nmr::ZeroActiveError);
  CHECK_THROWS_AS(kVoter.compute_isd_rowscan(inputs), nmr::ZeroActiveError);
}

TEST_CASE("ISD of the reference example") {
  const auto isd = kVoter.compute_isd(all_active({20, 30, 20, 10}));
  CHECK(isd.y == 20);
  CHECK(isd.index == 0);
  CHECK(isd.d == 2);
  CHECK(isd.eq == 2);
  CHECK(isd.e == std::vector<int>{1, 0, 1, 0});
  CHECK(isd.a == 0);
  CHECK(isd.err == 0);
}

TEST_CASE("tied classes raise the ambiguity flag and report the lowest index") {
  const auto isd = kVoter.compute_isd(all_active({20, 30, 20, 30}));
  CHECK(isd.eq == 2);
  CHECK(isd.d == 2);
  CHECK(isd.a == 1);
  CHECK(isd.y == 20);
  CHECK(isd.index == 0);
}

TEST_CASE("a single active input always wins") {
  VoterInputSet inputs;
  inputs.values = {11, 22, 33};
  inputs.active = {false, true, false};
  const auto isd = kVoter.compute_isd(inputs);
  CHECK(isd.y == 22);
  CHECK(isd.index == 1);
  CHECK(isd.eq == 1);
  CHECK(isd.d == 0);
  CHECK(isd.a == 0);
  CHECK(isd.e == std::vector<int>{0, 1, 0});
}

TEST_CASE("ISD matches the direct counting reference on random inputs") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 2000; ++round) {
    const auto inputs = oracle::random_inputs(rng, 10, 6, round % 2 == 0);
    CAPTURE(inputs.values);
    const auto expected = oracle::isd_by_counting(inputs);
    CHECK(kVoter.compute_isd(inputs) == expected);
  }
}

TEST_CASE("built matrices are symmetric, unit-diagonal and transitive") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 500; ++round) {
    const auto inputs = oracle::random_inputs(rng, 10, 4, true);
    const auto matrix = kVoter.build_matrix(inputs);
    CHECK(matrix.is_symmetric_unit_diagonal());
    CHECK(matrix.is_transitive());
  }
}

TEST_CASE("eq equals the top frequency and d the remaining active count") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 500; ++round) {
    const auto inputs = oracle::random_inputs(rng, 10, 4, true);
    const auto profile = kVoter.frequency_profile(inputs);
    const auto isd = kVoter.compute_isd(inputs);
    CHECK(isd.eq == profile.max_frequency());
    CHECK(isd.d == inputs.active_count() - profile.max_frequency());
  }
}

TEST_CASE("row scan equals the frequency-profile ISD, exhaustively") {
  for_each_input_set(5, 3, [&](const VoterInputSet& inputs) {
    const auto by_profile = kVoter.compute_isd(inputs);
    const auto by_scan = kVoter.compute_isd_rowscan(inputs);
    CAPTURE(inputs.values);
    REQUIRE(by_scan == by_profile);
  });
}

TEST_CASE("two distinct inputs are ambiguous") {
  // The virtual last row makes the singleton in the final position tie.
  const auto isd = kVoter.compute_isd_rowscan(all_active({1, 2}));
  CHECK(isd.a == 1);
  CHECK(isd.d == 1);
  CHECK(isd.eq == 1);
}

TEST_CASE("permuting inputs preserves the counts") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 300; ++round) {
    const auto inputs = oracle::random_inputs(rng, 8, 4, true);
    const std::size_t n = inputs.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(perm[i - 1], perm[nmr::uniform_below(rng, i)]);
    }

    VoterInputSet shuffled;
    shuffled.values.resize(n);
    shuffled.active.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      shuffled.values[perm[i]] = inputs.values[i];
      shuffled.active[perm[i]] = inputs.active[i];
    }

    const auto base = kVoter.compute_isd(inputs);
    const auto moved = kVoter.compute_isd(shuffled);
    CHECK(base.d == moved.d);
    CHECK(base.eq == moved.eq);
    CHECK(base.a == moved.a);

    auto freqs = kVoter.frequency_profile(inputs).frequencies();
    auto freqs_moved = kVoter.frequency_profile(shuffled).frequencies();
    CHECK(freqs == freqs_moved);

    if (base.a == 0) {
      CHECK(moved.index == perm[base.index]);
      CHECK(moved.y == base.y);
    } else {
      // Only membership of the winning class in the tied set survives.
      CHECK(moved.eq == base.eq);
    }
  }
}
