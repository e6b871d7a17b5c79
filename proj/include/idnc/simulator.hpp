#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "idnc/model.hpp"
#include "idnc/policies.hpp"

namespace idnc {

/// One Monte Carlo experiment: topology generation, initial broadcast phase
/// and recovery rounds under a scheduling policy.
struct ScenarioConfig {
  int num_devices = 0;          // M
  int num_packets = 0;          // N
  double connectivity = 0.0;    // C, pairwise connection probability in (0,1]
  double d2d_erasure = -1.0;    // P; negative means "derive as Q / 2"
  double bs_erasure = 0.0;      // Q in [0,1)
  long trials = 1;
  std::uint64_t seed = 0;
  PolicyId policy = PolicyId::kPcOptimal;
  int max_rounds = 0;           // 0 means the default cap of 10 * N * M
  bool strict_definition1 = false;  // erased packets at covered wanting devices count
  bool fixed_topology = false;      // one topology shared by all trials

  /// Resolved d2d erasure probability.
  double d2d() const { return d2d_erasure < 0.0 ? bs_erasure / 2.0 : d2d_erasure; }
  /// Resolved round cap.
  int round_cap() const {
    return max_rounds > 0 ? max_rounds : 10 * num_packets * num_devices;
  }

  /// Throws std::invalid_argument (message prefixed with the field name) when
  /// a field is out of range.
  void validate() const;
};

/// Outcome of a single trial.
struct TrialResult {
  long total_delay = 0;
  std::vector<long> per_device_delay;
  int rounds_used = 0;
  bool completed = false;
};

/// Aggregate over all trials of one experiment.
struct ExperimentStats {
  long trials = 0;
  long completed = 0;
  double mean_total_delay = 0.0;
  double std_total_delay = 0.0;
  double mean_device_delay = 0.0;  // trial mean of total delay / device count
  double std_device_delay = 0.0;
  double mean_rounds = 0.0;
};

/// Random connected topology: every unordered pair is linked independently
/// with probability `connectivity`; disconnected draws are rejected and
/// resampled. Aborts with std::runtime_error after 10000 rejected samples.
Topology generate_topology(int num_devices, double connectivity, std::mt19937_64& rng);

/// Broadcast phase: each device receives each packet with probability
/// (1 - q_i); packets nobody received are broadcast again with fresh draws.
/// Requires q_i < 1 for termination.
SideInformation initial_phase(int num_packets, const ErasureModel& erasure,
                              std::mt19937_64& rng);

/// Recovery loop: one schedule per round until every Wants set is empty or
/// the round cap is reached. Realized delay follows the expected-delay model:
/// wanting transmitters, interfered and shadowed wanting devices each count
/// one unit per round; a wanting device hearing exactly one transmission
/// counts one unit only when the packet arrives and is useless. With
/// strict_definition1 an erased packet at such a device also counts.
TrialResult run_recovery(SideInformation state, const Topology& topology,
                         const ErasureModel& erasure, PolicyId policy,
                         std::mt19937_64& rng, int max_rounds, bool strict_definition1);

/// Runs all trials of a config. Each trial owns a private random stream
/// derived from (seed, trial index), so results do not depend on execution
/// order and repeat runs are bitwise identical.
ExperimentStats run_experiment(const ScenarioConfig& config);

/// Per-trial results of an experiment, in trial order.
std::vector<TrialResult> run_trials(const ScenarioConfig& config);

/// The trial-local random stream for (seed, trial index).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index);

}  // namespace idnc
