#include "nmr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "nmr/jacobi.hpp"

namespace nmr {

Rational det_D(std::size_t n, const Rational& s) {
  if (n < 1) {
    throw UndefinedError("det_D requires n >= 1");
  }
  return rational_pow(s + 1, n - 1) * (s - Rational(static_cast<std::int64_t>(n)) + 1);
}

Rational det_F(std::size_t n, const Rational& s) {
  if (n < 1) {
    throw UndefinedError("det_F requires n >= 1");
  }
  return -rational_pow(s + 1, n - 1);
}

Rational det_Q(std::size_t n, const Rational& s) {
  if (n < 3) {
    throw UndefinedError("det_Q requires n >= 3: the zeroed pair needs a third coupled row");
  }
  const Rational n_minus_2(static_cast<std::int64_t>(n - 2));
  return s * det_D(n - 1, s) + n_minus_2 * s * det_F(n - 2, s);
}

namespace {

// Frequencies of every class of the full matrix: the active classes of the
// profile plus one singleton per inactive input.
std::vector<std::size_t> extended_frequencies(const FrequencyProfile& profile,
                                              std::size_t n_total) {
  const std::size_t active = profile.active_total();
  if (active > n_total) {
    throw std::invalid_argument("profile covers more inputs than the matrix order");
  }
  std::vector<std::size_t> freqs = profile.frequencies();
  freqs.insert(freqs.end(), n_total - active, 1);
  return freqs;
}

}  // namespace

IntPolynomial char_poly_proper(const FrequencyProfile& profile, std::size_t n_total) {
  const std::vector<std::size_t> freqs = extended_frequencies(profile, n_total);
  IntPolynomial poly = IntPolynomial::monomial(n_total - freqs.size());
  for (std::size_t f : freqs) {
    poly = poly * IntPolynomial::linear(-static_cast<std::int64_t>(f), 1);
  }
  return poly;
}

IntPolynomial char_poly_erroneous(const FrequencyProfile& profile,
                                  std::size_t violated_class_freq, std::size_t n_total) {
  if (violated_class_freq < 3) {
    throw UndefinedError("a transitivity violation needs a class of at least three equal elements");
  }
  std::vector<std::size_t> freqs = extended_frequencies(profile, n_total);
  auto it = std::find(freqs.begin(), freqs.end(), violated_class_freq);
  if (it == freqs.end()) {
    throw std::invalid_argument("violated class frequency not present in the profile");
  }
  freqs.erase(it);

  const auto f = static_cast<std::int64_t>(violated_class_freq);
  IntPolynomial poly = IntPolynomial::monomial(n_total - freqs.size() - 1 - 2);
  poly = poly * IntPolynomial::linear(-1, 1);
  poly = poly * IntPolynomial({2 - f, 1 - f, 1});
  for (std::size_t fi : freqs) {
    poly = poly * IntPolynomial::linear(-static_cast<std::int64_t>(fi), 1);
  }
  return poly;
}

namespace {

// Every (p, q), p < q, lying inside one connected component with A[p][q] = 0.
// Empty for a transitive matrix; exactly one entry for the single-violation
// pattern.
std::vector<std::pair<std::size_t, std::size_t>> internal_zero_pairs(
    const EqualityMatrix& matrix, const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<std::pair<std::size_t, std::size_t>> zeros;
  for (const auto& cls : classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (!matrix.at(cls[a], cls[b])) {
          zeros.emplace_back(cls[a], cls[b]);
        }
      }
    }
  }
  return zeros;
}

}  // namespace

BlockPermutation block_permutation(const EqualityMatrix& matrix) {
  auto classes = connected_classes(matrix);
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  const auto zero_pairs = internal_zero_pairs(matrix, classes);

  BlockPermutation result;
  for (auto& cls : classes) {
    // A single zeroed pair goes to the first two positions of its block so
    // the conjugated block carries the zeroes at (0,1).
    if (zero_pairs.size() == 1) {
      const auto [p, q] = zero_pairs.front();
      auto it = std::find(cls.begin(), cls.end(), p);
      if (it != cls.end()) {
        std::vector<std::size_t> reordered{p, q};
        for (std::size_t member : cls) {
          if (member != p && member != q) reordered.push_back(member);
        }
        cls = std::move(reordered);
      }
    }
    result.block_sizes.push_back(cls.size());
    result.order.insert(result.order.end(), cls.begin(), cls.end());
  }
  return result;
}

EqualityMatrix apply_permutation(const EqualityMatrix& matrix,
                                 const std::vector<std::size_t>& order) {
  const std::size_t n = matrix.order();
  if (order.size() != n) {
    throw std::invalid_argument("permutation length does not match matrix order");
  }
  EqualityMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      out.set_pair(r, c, matrix.at(order[r], order[c]));
    }
  }
  return out;
}

std::vector<Eigenpair> eigenpairs_proper(const EqualityMatrix& matrix) {
  if (!matrix.is_transitive()) {
    throw NotTransitiveError();
  }
  const std::size_t n = matrix.order();
  auto classes = connected_classes(matrix);
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });

  std::vector<Eigenpair> pairs;
  pairs.reserve(n);
  for (const auto& cls : classes) {
    Eigenpair indicator;
    indicator.eigenvalue = static_cast<std::int64_t>(cls.size());
    indicator.vector.assign(n, 0);
    for (std::size_t member : cls) indicator.vector[member] = 1;
    pairs.push_back(std::move(indicator));
  }
  for (const auto& cls : classes) {
    for (std::size_t t = 1; t < cls.size(); ++t) {
      Eigenpair diff;
      diff.eigenvalue = 0;
      diff.vector.assign(n, 0);
      diff.vector[cls.front()] = 1;
      diff.vector[cls[t]] = -1;
      pairs.push_back(std::move(diff));
    }
  }
  return pairs;
}

std::vector<double> numeric_eigenvalues(const EqualityMatrix& matrix) {
  const std::size_t n = matrix.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = static_cast<double>(matrix.at(i, j));
    }
  }
  return jacobi_eigenvalues(std::move(a), n);
}

double ExactEigenvalue::approx() const {
  if (is_integer()) {
    return static_cast<double>(int_value);
  }
  return (static_cast<double>(surd_p) +
          surd_sign * std::sqrt(static_cast<double>(surd_disc))) /
         2.0;
}

std::string ExactEigenvalue::str() const {
  if (is_integer()) {
    return std::to_string(int_value);
  }
  return "(" + std::to_string(surd_p) + (surd_sign > 0 ? "+" : "-") + "sqrt(" +
         std::to_string(surd_disc) + "))/2";
}

Spectrum analyze_spectrum(const EqualityMatrix& matrix, double tol) {
  const std::size_t n = matrix.order();
  Spectrum spectrum;
  spectrum.numeric = numeric_eigenvalues(matrix);
  spectrum.integral.reserve(n);
  for (double v : spectrum.numeric) {
    spectrum.integral.push_back(std::abs(v - std::round(v)) <= tol);
  }

  const auto classes = connected_classes(matrix);
  const auto zero_pairs = internal_zero_pairs(matrix, classes);
  const std::size_t m = classes.size();

  std::map<std::int64_t, std::size_t> integer_mults;
  std::vector<SpectrumEntry> surds;
  if (zero_pairs.empty()) {
    if (n > m) integer_mults[0] = n - m;
    for (const auto& cls : classes) {
      integer_mults[static_cast<std::int64_t>(cls.size())] += 1;
    }
  } else if (zero_pairs.size() == 1) {
    // Single violation: the component holding the zeroed pair of size f
    // contributes eigenvalue 1 and the surd pair (f-1 +/- sqrt(f^2+2f-7))/2;
    // the zero multiplicity drops from N-m to N-m-2.
    const std::size_t p = zero_pairs.front().first;
    std::size_t violated_size = 0;
    for (const auto& cls : classes) {
      const bool holds_pair = std::find(cls.begin(), cls.end(), p) != cls.end();
      if (holds_pair) {
        violated_size = cls.size();
      } else {
        integer_mults[static_cast<std::int64_t>(cls.size())] += 1;
      }
    }
    if (n > m + 2) integer_mults[0] = n - m - 2;
    integer_mults[1] += 1;
    const auto f = static_cast<std::int64_t>(violated_size);
    const std::int64_t disc = f * f + 2 * f - 7;
    surds.push_back({ExactEigenvalue::surd(f - 1, disc, -1), 1});
    surds.push_back({ExactEigenvalue::surd(f - 1, disc, +1), 1});
  }
  // More than one violation: no closed form, detection only.

  if (!integer_mults.empty() || !surds.empty()) {
    for (const auto& [value, mult] : integer_mults) {
      spectrum.exact.push_back({ExactEigenvalue::integer(value), mult});
    }
    spectrum.exact.insert(spectrum.exact.end(), surds.begin(), surds.end());
    std::sort(spectrum.exact.begin(), spectrum.exact.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                return a.value.approx() < b.value.approx();
              });
  }
  return spectrum;
}

bool spectral_selfcheck(const EqualityMatrix& matrix, double tol) {
  for (double v : numeric_eigenvalues(matrix)) {
    if (std::abs(v - std::round(v)) > tol) {
      return true;
    }
  }
  return false;
}

SpectralIsd isd_from_spectrum(const EqualityMatrix& matrix, const std::vector<bool>& active,
                              double tol) {
  const std::size_t n = matrix.order();
  if (active.size() != n) {
    throw std::invalid_argument("active mask length does not match matrix order");
  }
  const std::size_t n_active =
      static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
  if (n_active == 0) {
    throw ZeroActiveError();
  }

  SpectralIsd isd;
  isd.e.assign(n, 0);

  if (matrix.is_transitive() && !spectral_selfcheck(matrix, tol)) {
    // Active classes only; inactive inputs sit in singleton classes and are
    // masked out of the counts exactly as the voter masks them.
    const auto classes = connected_classes(matrix);
    std::size_t f1 = 0;
    for (const auto& cls : classes) {
      if (active[cls.front()]) f1 = std::max(f1, cls.size());
    }
    std::size_t tied = 0;
    const std::vector<std::size_t>* winner = nullptr;
    for (const auto& cls : classes) {
      if (!active[cls.front()] || cls.size() != f1) continue;
      ++tied;
      if (winner == nullptr) winner = &cls;
    }
    isd.eq = f1;
    isd.d = n_active - f1;
    isd.a = tied >= 2 ? 1 : 0;
    isd.err = 0;
    isd.index = static_cast<std::ptrdiff_t>(winner->front());
    for (std::size_t member : *winner) isd.e[member] = 1;
    return isd;
  }

  // Corrupted matrix: report the error and recover what the numeric spectrum
  // still supports, the dominant integer eigenvalue and its multiplicity.
  isd.err = 1;
  const std::vector<double> numeric = numeric_eigenvalues(matrix);
  double dominant = 0.0;
  bool found = false;
  std::size_t mult = 0;
  for (double v : numeric) {
    if (std::abs(v - std::round(v)) > tol) continue;
    if (!found || v > dominant + tol) {
      dominant = v;
      mult = 1;
      found = true;
    } else if (std::abs(v - dominant) <= tol) {
      ++mult;
    }
  }
  if (found && dominant > 0.5) {
    isd.eq = static_cast<std::size_t>(std::llround(dominant));
    isd.d = n_active >= isd.eq ? n_active - isd.eq : 0;
    isd.a = mult >= 2 ? 1 : 0;
  } else {
    isd.eq = 0;
    isd.d = n_active;
    isd.a = 0;
  }
  return isd;
}

}  // namespace nmr
