#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmr {

using Word = std::uint64_t;

struct VoterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Voting with zero active inputs (a "0MR" configuration) has no defined output.
struct ZeroActiveError : VoterError {
  ZeroActiveError() : VoterError("no active inputs: 0MR voting is undefined") {}
};

struct NotReducibleError : VoterError {
  NotReducibleError() : VoterError("a 1-input voter has no reduced matrix") {}
};

struct NotTransitiveError : VoterError {
  NotTransitiveError() : VoterError("matrix does not represent an equivalence relation") {}
};

struct NoEligibleClassError : VoterError {
  NoEligibleClassError() : VoterError("no value class of size >= 3 to inject into") {}
};

struct UndefinedError : VoterError {
  using VoterError::VoterError;
};

struct AllPairsOffError : VoterError {
  AllPairsOffError() : VoterError("policy would leave no powered pair") {}
};

/// One voting query: N module output words plus the per-input programming
/// signals p_i that mark an input as participating.
struct VoterInputSet {
  std::vector<Word> values;
  std::vector<bool> active;

  std::size_t size() const { return values.size(); }
  std::size_t active_count() const;

  // Throws std::invalid_argument on empty input or length mismatch.
  void validate() const;
};

/// Symmetric 0/1 matrix with unit diagonal; entry (i,j) records whether
/// inputs i and j carry equal words.
class EqualityMatrix {
 public:
  EqualityMatrix() = default;
  explicit EqualityMatrix(std::size_t order);  // identity

  std::size_t order() const { return n_; }
  int at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }

  // Writes both (i,j) and (j,i). The diagonal is fixed at 1.
  void set_pair(std::size_t i, std::size_t j, int value);

  bool is_symmetric_unit_diagonal() const;
  bool is_transitive() const;

  // Rows of '0'/'1' characters, one row per line.
  std::string pretty() const;

  bool operator==(const EqualityMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// The strictly-upper-triangular content of an EqualityMatrix packed into an
/// (N-1)x(N-1) array. Row/column enumeration of the source matrix is kept:
/// display cell (i, c) holds A[i][c+1] when c >= i and 0 otherwise.
class ReducedMatrix {
 public:
  ReducedMatrix() = default;
  ReducedMatrix(std::size_t source_order, std::vector<std::uint8_t> cells);

  std::size_t order() const { return m_; }  // N-1

  int cell(std::size_t row, std::size_t col) const { return cells_[row * m_ + col]; }

  // Entry in source-matrix coordinates, valid for j > i.
  int upper(std::size_t i, std::size_t j) const { return cell(i, j - 1); }

  std::size_t fill_zero_count() const { return m_ * (m_ - 1) / 2; }

  std::string pretty() const;

 private:
  std::size_t m_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct ValueClass {
  Word value = 0;
  std::size_t frequency = 0;
  std::vector<std::size_t> members;  // sorted ascending
};

/// Partition of the active input positions by value equality. Classes are
/// ordered by frequency descending, ties by first member ascending, so
/// frequencies() is the sorted sequence f1 >= f2 >= ... >= fm.
struct FrequencyProfile {
  std::vector<ValueClass> classes;

  std::size_t m() const { return classes.size(); }
  std::size_t max_frequency() const { return classes.empty() ? 0 : classes.front().frequency; }
  std::size_t active_total() const;
  std::vector<std::size_t> frequencies() const;
};

/// The voter's self-report: voted value y (with its source index), the
/// agree/differ counts, the per-input equality flags, the ambiguity flag and
/// the error flag.
struct InputStateDescriptor {
  Word y = 0;
  std::size_t index = 0;
  std::size_t d = 0;
  std::size_t eq = 0;
  std::vector<int> e;
  int a = 0;
  int err = 0;

  bool operator==(const InputStateDescriptor& other) const = default;
};

/// Partition of 0..N-1 into the connected components of the matrix's
/// off-diagonal ones. For a transitive matrix these are exactly the value
/// classes; for a corrupted matrix they are the intended classes as long as
/// the corruption keeps each class connected. Components are ordered by
/// first member ascending, members sorted ascending.
std::vector<std::vector<std::size_t>> connected_classes(const EqualityMatrix& matrix);

}  // namespace nmr
