#pragma once

#include <string>

#include "idnc/cooperation.hpp"
#include "idnc/model.hpp"

namespace idnc {

/// The scheduling policies compared by the simulator.
enum class PolicyId {
  kPmp,            // base station performs the recovery transmissions
  kFcD2d,          // single-transmitter device-to-device recovery
  kPcHeuristic,    // interference-free multi-transmitter recovery
  kPcOptimal,      // clustered multi-transmitter recovery, delay optimal
  kOracle,         // exhaustive search, small instances only
};

std::string to_string(PolicyId id);
PolicyId policy_from_string(const std::string& name);

/// Delay-optimal schedule: maximum-weight clique of the layered cooperation
/// graph. Minimizes the expected decoding delay over every transmitter set
/// and every admissible combination.
Schedule schedule_pc_optimal(const SideInformation& state, const Topology& topology,
                             const ErasureModel& erasure);

/// Interference-free heuristic: maximum-weight clique over singleton
/// clusters. The resulting transmitter set never interferes anywhere.
Schedule schedule_pc_heuristic(const SideInformation& state, const Topology& topology,
                               const ErasureModel& erasure);

/// Single-transmitter baseline: the best one-device schedule on the actual
/// topology, ties to the smallest device id.
Schedule schedule_fc(const SideInformation& state, const Topology& topology,
                     const ErasureModel& erasure);

/// Base-station baseline: one broadcast chosen from the full frame, targeted
/// at every device that can decode it.
Schedule schedule_pmp(const SideInformation& state, const ErasureModel& erasure);

/// Exhaustive minimization of the expected delay over all transmitter sets
/// and, per transmitter, all combinations from its Has set. Deterministic
/// lexicographic tie-break. Rejects instances above 8 devices or 4 packets.
Schedule schedule_oracle(const SideInformation& state, const Topology& topology,
                         const ErasureModel& erasure);

/// Dispatches on the policy id.
Schedule make_schedule(PolicyId policy, const SideInformation& state,
                       const Topology& topology, const ErasureModel& erasure);

}  // namespace idnc
