#include "idnc/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace idnc {

namespace {

void reject(const std::string& field, const std::string& why) {
  throw std::invalid_argument(field + ": " + why);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void ScenarioConfig::validate() const {
  if (num_devices < 1 || num_devices > IdSet::kMaxId) {
    reject("M", "device count must lie in [1, " + std::to_string(IdSet::kMaxId) + "]");
  }
  if (num_packets < 1 || num_packets > IdSet::kMaxId) {
    reject("N", "packet count must lie in [1, " + std::to_string(IdSet::kMaxId) + "]");
  }
  if (!(connectivity > 0.0 && connectivity <= 1.0)) {
    reject("C", "connectivity index must lie in (0, 1]");
  }
  if (bs_erasure < 0.0 || bs_erasure >= 1.0) {
    reject("Q", "base-station erasure probability must lie in [0, 1)");
  }
  if (d2d_erasure >= 0.0 && d2d_erasure > 1.0) {
    reject("P", "erasure probability must lie in [0, 1]");
  }
  if (trials < 1) reject("trials", "at least one trial required");
  if (max_rounds < 0) reject("max_rounds", "must be non-negative");
  if (policy == PolicyId::kOracle && (num_devices > 8 || num_packets > 4)) {
    reject("policy", "ORACLE is limited to M <= 8 and N <= 4");
  }
}

Topology generate_topology(int num_devices, double connectivity, std::mt19937_64& rng) {
  if (!(connectivity > 0.0 && connectivity <= 1.0)) {
    throw std::invalid_argument("connectivity index must lie in (0, 1]");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::pair<DeviceId, DeviceId>> edges;
    for (int i = 1; i <= num_devices; ++i) {
      for (int j = i + 1; j <= num_devices; ++j) {
        if (unit(rng) < connectivity) edges.emplace_back(i, j);
      }
    }
    try {
      return Topology::from_edges(num_devices, edges);
    } catch (const std::invalid_argument&) {
      continue;  // disconnected draw, resample
    }
  }
  throw std::runtime_error("topology generation: no connected sample in 10000 attempts");
}

SideInformation initial_phase(int num_packets, const ErasureModel& erasure,
                              std::mt19937_64& rng) {
  const int m = erasure.num_devices();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<IdSet> has(static_cast<std::size_t>(m));
  for (int l = 1; l <= num_packets; ++l) {
    bool held = false;
    while (!held) {
      for (int i = 1; i <= m; ++i) {
        if (unit(rng) < 1.0 - erasure.bs(i)) {
          has[static_cast<std::size_t>(i - 1)].insert(l);
          held = true;
        }
      }
    }
  }
  return SideInformation(m, num_packets, std::move(has));
}

TrialResult run_recovery(SideInformation state, const Topology& topology,
                         const ErasureModel& erasure, PolicyId policy,
                         std::mt19937_64& rng, int max_rounds, bool strict_definition1) {
  TrialResult result;
  result.per_device_delay.assign(static_cast<std::size_t>(state.num_devices()), 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  DelayTally tally(state.num_devices());
  while (!state.all_satisfied() && result.rounds_used < max_rounds) {
    Schedule schedule = make_schedule(policy, state, topology, erasure);
    ++result.rounds_used;

    // Snapshot: decoding inside the loop shrinks the live wanting set.
    const IdSet round_wanting = state.wanting_devices();

    if (schedule.base_station) {
      const Transmission& t = schedule.transmissions.front();
      for (int j : round_wanting) {
        bool received = unit(rng) < 1.0 - erasure.bs(j);
        if (!received) {
          if (strict_definition1) tally.add(j);
          continue;
        }
        Classification c = classify_packet(state, j, t.combination);
        if (c.kind == PacketClass::kInstantlyDecodable) {
          state = state.with_packet_decoded(j, c.packet);
        } else {
          tally.add(j);
        }
      }
      continue;
    }

    const IdSet transmitters = schedule.transmitter_set();
    const IdSet interfered = interference_set(topology, transmitters);
    const IdSet shadowed = shadow_set(topology, transmitters);
    for (int j : round_wanting) {
      if (transmitters.contains(j) || interfered.contains(j) || shadowed.contains(j)) {
        tally.add(j);
        continue;
      }
      // Exactly one transmitter is audible here.
      const Transmission* audible = nullptr;
      for (const Transmission& t : schedule.transmissions) {
        if (topology.coverage(t.sender).contains(j)) {
          audible = &t;
          break;
        }
      }
      bool received = unit(rng) < 1.0 - erasure.d2d(audible->sender, j);
      if (!received) {
        if (strict_definition1) tally.add(j);
        continue;
      }
      if (audible->combination.empty()) {
        tally.add(j);  // heard a packet with nothing new inside
        continue;
      }
      Classification c = classify_packet(state, j, audible->combination);
      if (c.kind == PacketClass::kInstantlyDecodable) {
        state = state.with_packet_decoded(j, c.packet);
      } else {
        tally.add(j);
      }
    }
  }

  result.per_device_delay = tally.per_device;
  result.total_delay = tally.total();
  result.completed = state.all_satisfied();
  return result;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial_index + 1)));
}

std::vector<TrialResult> run_trials(const ScenarioConfig& config) {
  config.validate();
  const ErasureModel erasure =
      ErasureModel::uniform(config.num_devices, config.d2d(), config.bs_erasure);

  std::vector<TrialResult> results;
  results.reserve(static_cast<std::size_t>(config.trials));

  Topology pinned = [&] {
    if (!config.fixed_topology) {
      return Topology::from_edges(1, {});  // placeholder, regenerated per trial
    }
    std::mt19937_64 rng = trial_rng(config.seed, 0xT0P0ULL);
    return generate_topology(config.num_devices, config.connectivity, rng);
  }();

  for (long t = 0; t < config.trials; ++t) {
    std::mt19937_64 rng = trial_rng(config.seed, static_cast<std::uint64_t>(t));
    Topology topology = config.fixed_topology
                            ? pinned
                            : generate_topology(config.num_devices, config.connectivity, rng);
    SideInformation state = initial_phase(config.num_packets, erasure, rng);
    results.push_back(run_recovery(std::move(state), topology, erasure, config.policy, rng,
                                   config.round_cap(), config.strict_definition1));
  }
  return results;
}

ExperimentStats run_experiment(const ScenarioConfig& config) {
  std::vector<TrialResult> results = run_trials(config);

  ExperimentStats stats;
  stats.trials = static_cast<long>(results.size());
  double sum_total = 0.0, sum_total_sq = 0.0;
  double sum_dev = 0.0, sum_dev_sq = 0.0;
  double sum_rounds = 0.0;
  for (const TrialResult& r : results) {
    double total = static_cast<double>(r.total_delay);
    double per_device = total / config.num_devices;
    sum_total += total;
    sum_total_sq += total * total;
    sum_dev += per_device;
    sum_dev_sq += per_device * per_device;
    sum_rounds += r.rounds_used;
    if (r.completed) ++stats.completed;
  }
  const double n = static_cast<double>(results.size());
  stats.mean_total_delay = sum_total / n;
  stats.mean_device_delay = sum_dev / n;
  stats.mean_rounds = sum_rounds / n;
  if (results.size() > 1) {
    stats.std_total_delay = std::sqrt(
        std::max(0.0, (sum_total_sq - n * stats.mean_total_delay * stats.mean_total_delay) /
                          (n - 1.0)));
    stats.std_device_delay = std::sqrt(
        std::max(0.0, (sum_dev_sq - n * stats.mean_device_delay * stats.mean_device_delay) /
                          (n - 1.0)));
  }
  return stats;
}

}  // namespace idnc
