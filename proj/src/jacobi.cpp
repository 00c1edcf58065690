#include "nmr/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nmr {

namespace {

double off_frobenius(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double v = a[p * n + q];
      sum += 2.0 * v * v;
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       const JacobiOptions& options) {
  if (a.size() != n * n) {
    throw std::invalid_argument("jacobi: matrix storage does not match order");
  }
  if (n == 0) return {};

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_frobenius(a, n) < options.off_frobenius_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) {
    eigenvalues[i] = a[i * n + i];
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace nmr
