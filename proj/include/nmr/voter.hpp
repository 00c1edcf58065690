#pragma once

#include "nmr/types.hpp"

namespace nmr {

/// Exact 1-out-of-N plurality voter over fixed-width words. Inputs can be
/// programmed active or inactive per query; an inactive input is treated as
/// different from every other input and is excluded from the counts.
///
/// Immutable after construction and safe to share across threads; every
/// operation is a pure function of its arguments.
class Voter {
 public:
  explicit Voter(unsigned word_width = 64);

  unsigned word_width() const { return width_; }
  Word value_mask() const { return mask_; }

  /// A[i][j] = 1 iff i == j, or both inputs are active and carry equal words.
  EqualityMatrix build_matrix(const VoterInputSet& inputs) const;

  /// Groups the active positions by value equality. Throws ZeroActiveError.
  FrequencyProfile frequency_profile(const VoterInputSet& inputs) const;

  /// ISD from the frequency profile: y is the value of the largest class
  /// (smallest first-occurrence index on ties), eq its frequency, d the
  /// remaining active count, a the tie flag. Throws ZeroActiveError.
  InputStateDescriptor compute_isd(const VoterInputSet& inputs) const;

  /// Same ISD derived by scanning reduced-matrix rows for the smallest
  /// number of zeros. Zeros are counted across the full row width and a
  /// virtual all-zero row stands in for the last input, so singleton values
  /// in the last position tie correctly. Agrees with compute_isd on every
  /// input set.
  InputStateDescriptor compute_isd_rowscan(const VoterInputSet& inputs) const;

 private:
  unsigned width_;
  Word mask_;
};

/// Packs the strictly-upper-triangular entries into an (N-1)x(N-1) array,
/// zero-filling the (N-1)(N-2)/2 unused places. Throws NotReducibleError for
/// a 1x1 matrix.
ReducedMatrix reduce_matrix(const EqualityMatrix& matrix);

}  // namespace nmr
