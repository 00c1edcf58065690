#include "nmr/voter.hpp"

#include <algorithm>
#include <unordered_map>

namespace nmr {

Voter::Voter(unsigned word_width) : width_(word_width) {
  if (word_width < 1 || word_width > 64) {
    throw std::invalid_argument("word width must be in [1, 64]");
  }
  mask_ = word_width == 64 ? ~Word{0} : (Word{1} << word_width) - 1;
}

EqualityMatrix Voter::build_matrix(const VoterInputSet& inputs) const {
  inputs.validate();
  const std::size_t n = inputs.size();
  EqualityMatrix matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!inputs.active[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (inputs.active[j] && (inputs.values[i] & mask_) == (inputs.values[j] & mask_)) {
        matrix.set_pair(i, j, 1);
      }
    }
  }
  return matrix;
}

FrequencyProfile Voter::frequency_profile(const VoterInputSet& inputs) const {
  inputs.validate();
  if (inputs.active_count() == 0) {
    throw ZeroActiveError();
  }
  std::unordered_map<Word, std::size_t> class_of;  // value -> index into classes
  FrequencyProfile profile;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!inputs.active[i]) continue;
    const Word v = inputs.values[i] & mask_;
    auto [it, inserted] = class_of.try_emplace(v, profile.classes.size());
    if (inserted) {
      profile.classes.push_back(ValueClass{v, 0, {}});
    }
    auto& cls = profile.classes[it->second];
    cls.frequency += 1;
    cls.members.push_back(i);
  }
  std::stable_sort(profile.classes.begin(), profile.classes.end(),
                   [](const ValueClass& a, const ValueClass& b) {
                     if (a.frequency != b.frequency) return a.frequency > b.frequency;
                     return a.members.front() < b.members.front();
                   });
  return profile;
}

InputStateDescriptor Voter::compute_isd(const VoterInputSet& inputs) const {
  const FrequencyProfile profile = frequency_profile(inputs);
  const std::size_t f1 = profile.max_frequency();

  // Classes are ordered largest-first with ties broken by first occurrence,
  // so the front class is the reported candidate.
  const ValueClass& winner = profile.classes.front();
  std::size_t tied = 0;
  for (const auto& cls : profile.classes) {
    if (cls.frequency == f1) ++tied;
  }

  InputStateDescriptor isd;
  isd.y = winner.value;
  isd.index = winner.members.front();
  isd.eq = f1;
  isd.d = inputs.active_count() - f1;
  isd.a = tied >= 2 ? 1 : 0;
  isd.err = 0;
  isd.e.assign(inputs.size(), 0);
  for (std::size_t member : winner.members) {
    isd.e[member] = 1;
  }
  return isd;
}

InputStateDescriptor Voter::compute_isd_rowscan(const VoterInputSet& inputs) const {
  inputs.validate();
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs.active[i]) act.push_back(i);
  }
  if (act.empty()) {
    throw ZeroActiveError();
  }
  const std::size_t k = act.size();
  const EqualityMatrix matrix = build_matrix(inputs);

  // Zero count over the full k-1 columns of each row of the reduced matrix
  // restricted to active positions. Row k-1 does not exist in the reduced
  // matrix; a virtual all-zero row (count k-1) represents it, which is the
  // natural continuation of the count for the last input.
  std::vector<std::size_t> zeros(k, k - 1);
  for (std::size_t r = 0; r + 1 < k; ++r) {
    std::size_t ones = 0;
    for (std::size_t c = r + 1; c < k; ++c) {
      ones += static_cast<std::size_t>(matrix.at(act[r], act[c]));
    }
    zeros[r] = (k - 1) - ones;
  }

  std::size_t best = zeros[0];
  std::size_t best_row = 0;
  std::size_t ties = 0;
  for (std::size_t r = 0; r < k; ++r) {
    if (zeros[r] < best) {
      best = zeros[r];
      best_row = r;
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (zeros[r] == best) ++ties;
  }

  InputStateDescriptor isd;
  isd.d = best;
  isd.eq = k - best;
  isd.index = act[best_row];
  isd.y = inputs.values[isd.index] & mask_;
  isd.a = ties >= 2 ? 1 : 0;
  isd.err = 0;
  isd.e.assign(inputs.size(), 0);
  isd.e[isd.index] = 1;
  for (std::size_t c = best_row + 1; c < k; ++c) {
    isd.e[act[c]] = matrix.at(act[best_row], act[c]);
  }
  return isd;
}

ReducedMatrix reduce_matrix(const EqualityMatrix& matrix) {
  const std::size_t n = matrix.order();
  if (n < 2) {
    throw NotReducibleError();
  }
  const std::size_t m = n - 1;
  std::vector<std::uint8_t> cells(m * m, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cells[i * m + (j - 1)] = static_cast<std::uint8_t>(matrix.at(i, j));
    }
  }
  return ReducedMatrix(n, std::move(cells));
}

}  // namespace nmr
