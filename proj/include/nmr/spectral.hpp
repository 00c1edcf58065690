#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nmr/polynomial.hpp"
#include "nmr/types.hpp"

namespace nmr {

inline constexpr double kDefaultIntegralityTol = 1e-6;

/// Determinant of the n x n pattern with s on the diagonal and -1 everywhere
/// else; closed form (s+1)^(n-1) * (s-n+1).
Rational det_D(std::size_t n, const Rational& s);

/// Determinant of the same pattern with the (0,0) entry replaced by -1;
/// closed form -(s+1)^(n-1).
Rational det_F(std::size_t n, const Rational& s);

/// Determinant of the pattern with s on the diagonal, the (0,1)/(1,0) pair
/// zeroed and -1 elsewhere, computed through the cofactor recurrence
/// s*D_{n-1}(s) + (n-2)*s*F_{n-2}(s). Requires n >= 3 (the zeroed pair needs
/// a third coupled row), otherwise UndefinedError.
Rational det_Q(std::size_t n, const Rational& s);

/// Characteristic polynomial of a properly built matrix:
/// x^(N-m) * prod_i (x - f_i), with one frequency-1 factor per inactive
/// input. profile covers the active inputs; n_total is the matrix order.
IntPolynomial char_poly_proper(const FrequencyProfile& profile, std::size_t n_total);

/// Characteristic polynomial after a single zeroed pair inside a class of
/// frequency violated_class_freq (>= 3, otherwise UndefinedError):
/// x^(N-m-2) * (x-1) * (x^2 + (1-f)x + (2-f)) * prod_{i != l} (x - f_i).
IntPolynomial char_poly_erroneous(const FrequencyProfile& profile,
                                  std::size_t violated_class_freq, std::size_t n_total);

/// Positions listed class-by-class so that conjugating by the permutation
/// yields a block-diagonal matrix of all-ones blocks, sizes non-increasing.
/// order[r] is the source index placed at position r. For a component
/// carrying a single zeroed pair, that pair is listed first, which puts the
/// zeroes at block positions (0,1).
struct BlockPermutation {
  std::vector<std::size_t> order;
  std::vector<std::size_t> block_sizes;
};

BlockPermutation block_permutation(const EqualityMatrix& matrix);

/// B[r][c] = A[order[r]][order[c]].
EqualityMatrix apply_permutation(const EqualityMatrix& matrix,
                                 const std::vector<std::size_t>& order);

struct Eigenpair {
  std::int64_t eigenvalue = 0;
  std::vector<std::int64_t> vector;
};

/// Full eigenbasis of a transitive matrix, N pairs in total: one 0/1
/// indicator eigenpair (f, members of the class) per class, ordered by
/// frequency descending then first member ascending, followed by the
/// null-space difference vectors (+1 at a class's first member, -1 at a
/// later member) for every class of size >= 2. Throws NotTransitiveError.
std::vector<Eigenpair> eigenpairs_proper(const EqualityMatrix& matrix);

/// Eigenvalues of the 0/1 matrix by the symmetric Jacobi solver, ascending.
std::vector<double> numeric_eigenvalues(const EqualityMatrix& matrix);

/// Exact eigenvalue: an integer, or the quadratic surd (p +/- sqrt(disc))/2.
struct ExactEigenvalue {
  std::int64_t int_value = 0;
  std::int64_t surd_p = 0;
  std::int64_t surd_disc = 0;  // 0 for integers
  int surd_sign = 0;           // +1 or -1 for surds

  static ExactEigenvalue integer(std::int64_t v) { return {v, 0, 0, 0}; }
  static ExactEigenvalue surd(std::int64_t p, std::int64_t disc, int sign) {
    return {0, p, disc, sign};
  }

  bool is_integer() const { return surd_disc == 0; }
  double approx() const;
  std::string str() const;  // "3" or "(2+sqrt(8))/2"
};

struct SpectrumEntry {
  ExactEigenvalue value;
  std::size_t multiplicity = 0;
};

/// Exact spectrum (when the matrix is proper, or erroneous with a single
/// zeroed pair) plus the numeric cross-check. exact is empty when more than
/// one independent violation is present; numeric is always filled.
struct Spectrum {
  std::vector<SpectrumEntry> exact;  // ascending by value
  std::vector<double> numeric;       // ascending
  std::vector<bool> integral;        // per numeric eigenvalue, within tol

  bool exact_known() const { return !exact.empty(); }
};

Spectrum analyze_spectrum(const EqualityMatrix& matrix,
                          double tol = kDefaultIntegralityTol);

/// err = 1 iff some numeric eigenvalue is farther than tol from its nearest
/// integer.
bool spectral_selfcheck(const EqualityMatrix& matrix,
                        double tol = kDefaultIntegralityTol);

/// ISD recovered from the matrix spectrum alone (no input words): eq is the
/// largest active-class eigenvalue, e the indicator eigenvector of the
/// winning class, a its multiplicity flag. index is the first member of the
/// winning class, or -1 when no class can be singled out. On a corrupted
/// matrix err = 1 and the counts fall back to the dominant integer
/// eigenvalue of the numeric spectrum.
struct SpectralIsd {
  std::size_t eq = 0;
  std::size_t d = 0;
  std::vector<int> e;
  int a = 0;
  int err = 0;
  std::ptrdiff_t index = -1;
};

SpectralIsd isd_from_spectrum(const EqualityMatrix& matrix, const std::vector<bool>& active,
                              double tol = kDefaultIntegralityTol);

}  // namespace nmr
