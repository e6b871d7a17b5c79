#pragma once

#include <vector>

#include "idnc/clique.hpp"
#include "idnc/model.hpp"

namespace idnc {

/// Per-transmitter coding graph. One vertex per (device k, packet l) pair with
/// k inside the transmitter's opportunity set, l wanted by k and held by the
/// transmitter. Two vertices are adjacent when the same XOR combination can
/// serve both devices: either they name the same packet, or each device
/// already holds the other's packet. Vertex weight is the reception
/// probability of the targeted device.
struct LocalIdncGraph {
  DeviceId owner = 0;  // 0 for the base station
  IdSet opportunity;
  std::vector<std::pair<DeviceId, PacketId>> vertices;  // sorted (device, packet)
  WeightedGraph graph;
};

/// The transmitter's best XOR combination: packet set, decodable devices and
/// the summed reception-probability gain.
struct CombinationChoice {
  IdSet combination;
  IdSet targets;
  double gain = 0.0;
};

/// Builds the coding graph of device i over an explicit opportunity set
/// (a subset of the coverage zone of i, excluding i).
LocalIdncGraph build_local_graph(const SideInformation& state, const Topology& topology,
                                 const ErasureModel& erasure, DeviceId i,
                                 const IdSet& opportunity);

/// Coding graph of a virtual base-station transmitter: it holds the whole
/// frame, reaches every wanting device, and vertex weights use the
/// base-station erasures.
LocalIdncGraph build_base_station_graph(const SideInformation& state,
                                        const ErasureModel& erasure);

/// Solves the maximum-weight clique of a coding graph and converts it into a
/// packet combination. Targets are every opportunity device for which the
/// combination is instantly decodable; the gain equals the clique weight.
CombinationChoice best_combination(const SideInformation& state, const LocalIdncGraph& local);

}  // namespace idnc
