#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nmr/types.hpp"
#include "nmr/voter.hpp"

namespace nmr {

/// One processor-sensor pair. While powered and healthy it reproduces the
/// golden value; a transient fault corrupts exactly one step, a permanent
/// fault corrupts every step from permanent_at on.
struct ModuleModel {
  std::size_t id = 0;
  double transient_rate = 0.0;
  std::optional<std::uint64_t> permanent_at;
  bool powered = false;
};

struct PolicyConfig {
  std::size_t base_redundancy = 2;   // DMR at rest
  std::size_t critical_window = 20;  // steps observed for the critical test
  std::size_t critical_threshold = 3;  // faults in the window that bring in the 4th pair
  std::size_t suspicion_k = 3;  // consecutive unambiguous disagreements before power-off
  std::size_t downgrade_streak = 100;  // clean steps before returning to DMR
};

struct SimConfig {
  std::vector<ModuleModel> pairs;
  PolicyConfig policy;
  unsigned word_width = 64;

  void validate() const;
};

struct TraceRecord {
  std::uint64_t step = 0;
  Word golden = 0;
  std::vector<Word> outputs;   // 0 for unpowered pairs
  std::vector<bool> powered;   // state used for this step's vote
  std::vector<bool> active;    // the voter's programming mask; equals powered
  InputStateDescriptor isd;
  std::vector<std::string> actions;
  bool restart = false;  // a pair came online at this step boundary
};

/// Trace-driven adaptive redundancy: DMR at rest, TMR on the first
/// disagreement, 4MR when faults crowd the critical window, pair power-off
/// on suspicion of a permanent fault, and downgrade back to DMR after a
/// clean streak. Reconfiguration decided at step t takes effect at the
/// t+1 boundary. Deterministic given (config, seed).
class NmrodSimulator {
 public:
  NmrodSimulator(SimConfig config, std::uint64_t seed);

  TraceRecord step();

  static std::vector<TraceRecord> run(const SimConfig& config, std::uint64_t horizon,
                                      std::uint64_t seed);

 private:
  std::size_t powered_count() const;
  std::size_t available_count() const;

  SimConfig cfg_;
  Voter voter_;
  std::mt19937_64 rng_;
  std::uint64_t now_ = 0;
  std::size_t target_;
  std::vector<bool> powered_;
  std::vector<bool> retired_;
  std::vector<std::size_t> disagree_streak_;
  std::vector<bool> fault_window_;  // most recent critical_window steps
  std::size_t clean_streak_ = 0;
};

}  // namespace nmr
