#pragma once

#include <cstddef>
#include <vector>

namespace nmr {

struct JacobiOptions {
  double off_frobenius_tol = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a real symmetric matrix (row-major, n x n) by cyclic Jacobi
/// rotations, returned ascending. The matrix is taken by value; the caller's
/// copy is never touched. Stops when the off-diagonal Frobenius norm drops
/// below the tolerance or after max_sweeps sweeps, whichever comes first.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       const JacobiOptions& options = {});

}  // namespace nmr
