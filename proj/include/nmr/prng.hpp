#pragma once

#include <cstdint>
#include <random>

#include "nmr/types.hpp"

namespace nmr {

// Seeded randomness comes from std::mt19937_64, whose output sequence is
// fully specified by the standard. Draw mapping is done by hand below
// because std::uniform_int_distribution and generate_canonical are
// implementation-defined and would break bit-exact replay across toolchains.

/// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform_below: empty range");
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Double in [0, 1) with 53 random bits.
inline double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Nonzero corruption mask restricted to value_mask's bits.
inline Word nonzero_mask(std::mt19937_64& rng, Word value_mask) {
  Word m;
  do {
    m = rng() & value_mask;
  } while (m == 0);
  return m;
}

}  // namespace nmr
