#include "nmr/types.hpp"

#include <algorithm>
#include <numeric>

namespace nmr {

std::size_t VoterInputSet::active_count() const {
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

void VoterInputSet::validate() const {
  if (values.empty()) {
    throw std::invalid_argument("input set must contain at least one value");
  }
  if (values.size() != active.size()) {
    throw std::invalid_argument("values and active flags must have identical length");
  }
}

EqualityMatrix::EqualityMatrix(std::size_t order) : n_(order), bits_(order * order, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    bits_[i * n_ + i] = 1;
  }
}

void EqualityMatrix::set_pair(std::size_t i, std::size_t j, int value) {
  if (i == j) {
    throw std::invalid_argument("diagonal entries are fixed at 1");
  }
  bits_[i * n_ + j] = static_cast<std::uint8_t>(value != 0);
  bits_[j * n_ + i] = static_cast<std::uint8_t>(value != 0);
}

bool EqualityMatrix::is_symmetric_unit_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (at(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool EqualityMatrix::is_transitive() const {
  // A symmetric reflexive relation is transitive iff no unordered triple has
  // exactly two related pairs.
  for (std::size_t i = 0; i + 2 < n_; ++i) {
    for (std::size_t j = i + 1; j + 1 < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        const int ones = at(i, j) + at(i, k) + at(j, k);
        if (ones == 2) return false;
      }
    }
  }
  return true;
}

std::string EqualityMatrix::pretty() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out.push_back(at(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

ReducedMatrix::ReducedMatrix(std::size_t source_order, std::vector<std::uint8_t> cells)
    : m_(source_order - 1), cells_(std::move(cells)) {
  if (source_order < 2) {
    throw NotReducibleError();
  }
  if (cells_.size() != m_ * m_) {
    throw std::invalid_argument("reduced matrix cell count mismatch");
  }
}

std::string ReducedMatrix::pretty() const {
  std::string out;
  out.reserve(m_ * (m_ + 1));
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      out.push_back(cell(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::size_t FrequencyProfile::active_total() const {
  std::size_t total = 0;
  for (const auto& cls : classes) total += cls.frequency;
  return total;
}

std::vector<std::size_t> FrequencyProfile::frequencies() const {
  std::vector<std::size_t> freqs;
  freqs.reserve(classes.size());
  for (const auto& cls : classes) freqs.push_back(cls.frequency);
  return freqs;
}

std::vector<std::vector<std::size_t>> connected_classes(const EqualityMatrix& matrix) {
  const std::size_t n = matrix.order();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && w != v && matrix.at(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    classes.push_back(std::move(component));
  }
  return classes;
}

}  // namespace nmr
