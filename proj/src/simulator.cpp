#include "nmr/simulator.hpp"

#include <algorithm>

#include "nmr/prng.hpp"

namespace nmr {

void SimConfig::validate() const {
  if (pairs.empty()) {
    throw std::invalid_argument("simulation needs at least one pair");
  }
  for (const auto& pair : pairs) {
    if (pair.transient_rate < 0.0 || pair.transient_rate > 1.0) {
      throw std::invalid_argument("transient_rate must lie in [0, 1]");
    }
  }
  if (word_width < 1 || word_width > 64) {
    throw std::invalid_argument("word width must be in [1, 64]");
  }
  if (policy.base_redundancy < 1 || policy.critical_window < 1 ||
      policy.critical_threshold < 1 || policy.suspicion_k < 1 ||
      policy.downgrade_streak < 1) {
    throw std::invalid_argument("policy parameters must be positive");
  }
}

NmrodSimulator::NmrodSimulator(SimConfig config, std::uint64_t seed)
    : cfg_(std::move(config)), voter_(1), rng_(seed) {
  cfg_.validate();
  voter_ = Voter(cfg_.word_width);
  const std::size_t n = cfg_.pairs.size();
  for (std::size_t i = 0; i < n; ++i) {
    cfg_.pairs[i].id = i;
  }
  target_ = std::min(cfg_.policy.base_redundancy, n);
  powered_.assign(n, false);
  retired_.assign(n, false);
  disagree_streak_.assign(n, 0);
  for (std::size_t i = 0; i < target_; ++i) {
    powered_[i] = true;
  }
  if (powered_count() == 0) {
    throw AllPairsOffError();
  }
}

std::size_t NmrodSimulator::powered_count() const {
  return static_cast<std::size_t>(std::count(powered_.begin(), powered_.end(), true));
}

std::size_t NmrodSimulator::available_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < powered_.size(); ++i) {
    if (powered_[i] && !retired_[i]) ++count;
  }
  return count;
}

TraceRecord NmrodSimulator::step() {
  const std::size_t n = cfg_.pairs.size();
  const Word value_mask = voter_.value_mask();
  TraceRecord record;
  record.step = now_;

  // Boundary: reconfiguration decided last step takes effect now.
  if (now_ > 0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (retired_[i] && powered_[i]) powered_[i] = false;
    }
    std::size_t count = powered_count();
    for (std::size_t i = 0; i < n && count < target_; ++i) {
      if (!powered_[i] && !retired_[i]) {
        powered_[i] = true;
        ++count;
        record.restart = true;
      }
    }
    for (std::size_t i = n; i-- > 0 && count > target_;) {
      if (powered_[i]) {
        powered_[i] = false;
        --count;
      }
    }
  }
  if (powered_count() == 0) {
    throw AllPairsOffError();
  }
  for (std::size_t i = 0; i < n; ++i) {
    cfg_.pairs[i].powered = powered_[i];
  }

  // Fixed draw order per step: golden word, then per powered pair ascending
  // one transient draw plus mask draws when faulty. Keeps traces replayable.
  record.golden = rng_() & value_mask;
  record.outputs.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!powered_[i]) continue;
    const double u = canonical(rng_);
    const auto& pair = cfg_.pairs[i];
    const bool permanent = pair.permanent_at.has_value() && now_ >= *pair.permanent_at;
    const bool faulty = permanent || u < pair.transient_rate;
    record.outputs[i] = faulty ? record.golden ^ nonzero_mask(rng_, value_mask) : record.golden;
  }
  record.powered = powered_;
  record.active = powered_;

  record.isd = voter_.compute_isd(VoterInputSet{record.outputs, powered_});

  const bool fault = record.isd.d > 0;
  fault_window_.push_back(fault);
  if (fault_window_.size() > cfg_.policy.critical_window) {
    fault_window_.erase(fault_window_.begin());
  }
  clean_streak_ = fault ? 0 : clean_streak_ + 1;

  // Blame needs an unambiguous majority; ambiguous steps leave the
  // counters untouched.
  for (std::size_t i = 0; i < n; ++i) {
    if (!powered_[i]) {
      disagree_streak_[i] = 0;
    } else if (record.isd.e[i] == 1) {
      disagree_streak_[i] = 0;
    } else if (record.isd.a == 0) {
      disagree_streak_[i] += 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!powered_[i] || retired_[i] || disagree_streak_[i] < cfg_.policy.suspicion_k) {
      continue;
    }
    if (available_count() <= 1) {
      // Refuse to power off the last pair; 0MR is illegal.
      disagree_streak_[i] = 0;
      continue;
    }
    retired_[i] = true;
    record.actions.push_back("power_off:" + std::to_string(i));
  }

  const std::size_t window_faults =
      static_cast<std::size_t>(std::count(fault_window_.begin(), fault_window_.end(), true));
  if (fault && target_ <= 2) {
    target_ = 3;
    record.actions.push_back("escalate");
  } else if (target_ == 3 && window_faults >= cfg_.policy.critical_threshold) {
    target_ = 4;
    record.actions.push_back("critical_escalate");
  } else if (clean_streak_ >= cfg_.policy.downgrade_streak &&
             target_ > cfg_.policy.base_redundancy) {
    target_ = cfg_.policy.base_redundancy;
    clean_streak_ = 0;
    fault_window_.clear();
    record.actions.push_back("downgrade");
  }

  ++now_;
  return record;
}

std::vector<TraceRecord> NmrodSimulator::run(const SimConfig& config, std::uint64_t horizon,
                                             std::uint64_t seed) {
  if (horizon < 1) {
    throw std::invalid_argument("horizon must be at least 1");
  }
  NmrodSimulator sim(config, seed);
  std::vector<TraceRecord> trace;
  trace.reserve(horizon);
  for (std::uint64_t t = 0; t < horizon; ++t) {
    trace.push_back(sim.step());
  }
  return trace;
}

}  // namespace nmr
