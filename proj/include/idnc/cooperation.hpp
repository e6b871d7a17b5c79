#pragma once

#include <vector>

#include "idnc/clique.hpp"
#include "idnc/local_graph.hpp"
#include "idnc/model.hpp"

namespace idnc {

/// A cluster of transmitters whose coverage zones form one connected
/// interference blob: every proper non-empty subset shares coverage with the
/// rest (internal cohesion).
struct Cluster {
  IdSet members;
  IdSet total_coverage;
  IdSet intra_interference;  // non-members audible to two or more members
};

/// Partition of a transmitter set into clusters with pairwise disjoint total
/// coverage; the partition satisfying both constraints is unique.
struct Clustering {
  std::vector<Cluster> clusters;  // canonical order: lexicographic member sets
};

/// True when the member set is internally cohesive (connected under the
/// pairwise coverage-overlap relation). The empty set is not a cluster.
bool cluster_cohesive(const Topology& topology, const IdSet& members);

/// Decomposes a transmitter set into its unique clustering. The result does
/// not depend on seed choices or scan order.
Clustering build_clustering(const Topology& topology, const IdSet& transmitters);

/// As build_clustering, but growing clusters in the given scan order; used to
/// exercise the order-independence of the decomposition.
Clustering build_clustering_with_order(const Topology& topology,
                                       const std::vector<DeviceId>& scan_order);

/// Full per-cluster assessment: the members' best packet combinations over
/// their in-cluster opportunity zones, and the bookkeeping terms of the
/// expected-delay formula restricted to the cluster's coverage.
struct ClusterEvaluation {
  Cluster cluster;
  std::vector<Transmission> plans;  // one per member, sorted by sender

  int covered_wanting = 0;       // wanting devices inside the total coverage
  int transmitting_wanting = 0;  // wanting members
  int interfered_wanting = 0;    // wanting devices hearing two or more members
  double served_gain = 0.0;      // sum of (1 - p) over all targeted devices
  double unserved_loss = 0.0;    // sum of (1 - p) over covered wanting devices
                                 // left untargeted

  /// Net reduction of expected delay contributed by activating this cluster:
  /// summing it over any clustering gives exactly (wanting-device count minus
  /// the schedule's expected delay). Never negative. This is the vertex
  /// weight used by every cooperation graph and by the layered merge test.
  double delay_weight() const {
    return covered_wanting - transmitting_wanting - interfered_wanting - unserved_loss;
  }

  /// Coverage-credit form of the vertex weight: untargeted covered devices
  /// count their full coverage credit instead of the reception-risk part
  /// only. Exceeds delay_weight() by the summed reception probability of the
  /// covered-but-unserved wanting devices.
  double nominal_weight() const {
    return covered_wanting - transmitting_wanting - interfered_wanting + served_gain;
  }
};

/// Evaluates one cohesive cluster. Throws std::invalid_argument when the
/// member set is empty or not cohesive.
ClusterEvaluation evaluate_cluster(const SideInformation& state, const Topology& topology,
                                   const ErasureModel& erasure, const IdSet& members);

/// Cooperation graph: vertices are clusters, edges join clusters with
/// disjoint total coverage, and cliques therefore correspond to feasible
/// transmitter sets. Vertex weights are the cluster delay weights.
struct CooperationGraph {
  WeightedGraph graph;
  std::vector<ClusterEvaluation> clusters;  // clusters[v] belongs to vertex v
};

/// Cooperation graph restricted to singleton clusters: one vertex per device,
/// edges between devices with disjoint coverage zones. Its maximum-weight
/// clique solves the interference-free relaxation.
CooperationGraph singleton_graph(const SideInformation& state, const Topology& topology,
                                 const ErasureModel& erasure);

/// Reference construction with every cohesive cluster as a vertex. Cliques
/// are in one-to-one correspondence with transmitter sets. Exponential size:
/// rejected above 14 devices, meant for cross-checking only.
CooperationGraph build_full_graph(const SideInformation& state, const Topology& topology,
                                  const ErasureModel& erasure);

/// Layered construction used for scheduling. Layer zero holds every singleton
/// cluster; each later layer merges an existing cluster with an overlapping
/// singleton when the merged delay weight is no worse than either part.
/// Duplicate member sets are kept once. The maximum-weight clique matches the
/// full reference graph's.
CooperationGraph build_pruned_graph(const SideInformation& state, const Topology& topology,
                                    const ErasureModel& erasure);

/// Converts a clique of clusters into the corresponding schedule: the union
/// of member sets transmits, each member with its evaluated combination.
Schedule schedule_from_clique(const CooperationGraph& graph, const Clique& clique);

}  // namespace idnc
