#include "idnc/cooperation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace idnc {

namespace {

IdSet multi_covered(const Topology& topology, const IdSet& members) {
  IdSet once, multi;
  for (int i : members) {
    multi |= once & topology.coverage(i);
    once |= topology.coverage(i);
  }
  return multi;
}

Cluster make_cluster(const Topology& topology, const IdSet& members) {
  Cluster z;
  z.members = members;
  z.total_coverage = total_coverage(topology, members);
  z.intra_interference = multi_covered(topology, members) - members;
  return z;
}

}  // namespace

bool cluster_cohesive(const Topology& topology, const IdSet& members) {
  if (members.empty()) return false;
  // Connectivity under the pairwise coverage-overlap relation; a split with
  // no overlap across it would violate cohesion.
  IdSet reached;
  reached.insert(members.first());
  IdSet cov = topology.coverage(members.first());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int b : members - reached) {
      if (topology.coverage(b).intersects(cov)) {
        reached.insert(b);
        cov |= topology.coverage(b);
        grew = true;
      }
    }
  }
  return reached == members;
}

Clustering build_clustering(const Topology& topology, const IdSet& transmitters) {
  std::vector<DeviceId> order = transmitters.to_vector();
  return build_clustering_with_order(topology, order);
}

Clustering build_clustering_with_order(const Topology& topology,
                                       const std::vector<DeviceId>& scan_order) {
  Clustering result;
  IdSet remaining;
  for (DeviceId d : scan_order) remaining.insert(d);

  for (DeviceId seed : scan_order) {
    if (!remaining.contains(seed)) continue;
    IdSet members{seed};
    IdSet cov = topology.coverage(seed);
    remaining.erase(seed);
    bool grew = true;
    while (grew) {
      grew = false;
      for (DeviceId b : scan_order) {
        if (remaining.contains(b) && topology.coverage(b).intersects(cov)) {
          members.insert(b);
          cov |= topology.coverage(b);
          remaining.erase(b);
          grew = true;
        }
      }
    }
    result.clusters.push_back(make_cluster(topology, members));
  }

  std::sort(result.clusters.begin(), result.clusters.end(),
            [](const Cluster& a, const Cluster& b) { return lex_less(a.members, b.members); });
  return result;
}

ClusterEvaluation evaluate_cluster(const SideInformation& state, const Topology& topology,
                                   const ErasureModel& erasure, const IdSet& members) {
  if (!cluster_cohesive(topology, members)) {
    throw std::invalid_argument("cluster: member set is empty or not cohesive");
  }

  ClusterEvaluation eval;
  eval.cluster = make_cluster(topology, members);
  const IdSet wanting = state.wanting_devices();
  const IdSet blocked = members | eval.cluster.intra_interference;

  eval.covered_wanting = (eval.cluster.total_coverage & wanting).size();
  eval.transmitting_wanting = (members & wanting).size();
  eval.interfered_wanting = (eval.cluster.intra_interference & wanting).size();

  for (int i : members) {
    IdSet zone = topology.coverage(i) - blocked;
    LocalIdncGraph local = build_local_graph(state, topology, erasure, i, zone);
    CombinationChoice choice = best_combination(state, local);
    eval.served_gain += choice.gain;
    for (int j : (zone & wanting) - choice.targets) {
      eval.unserved_loss += 1.0 - erasure.d2d(i, j);
    }
    eval.plans.push_back(Transmission{i, choice.combination, choice.targets});
  }
  return eval;
}

namespace {

CooperationGraph assemble(std::vector<ClusterEvaluation> evals) {
  CooperationGraph g;
  g.clusters = std::move(evals);
  for (const ClusterEvaluation& e : g.clusters) {
    g.graph.add_vertex(e.delay_weight());
  }
  for (std::size_t a = 0; a < g.clusters.size(); ++a) {
    for (std::size_t b = a + 1; b < g.clusters.size(); ++b) {
      if (!g.clusters[a].cluster.total_coverage.intersects(
              g.clusters[b].cluster.total_coverage)) {
        g.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return g;
}

}  // namespace

CooperationGraph singleton_graph(const SideInformation& state, const Topology& topology,
                                 const ErasureModel& erasure) {
  std::vector<ClusterEvaluation> evals;
  for (int i = 1; i <= topology.num_devices(); ++i) {
    evals.push_back(evaluate_cluster(state, topology, erasure, IdSet{i}));
  }
  return assemble(std::move(evals));
}

CooperationGraph build_full_graph(const SideInformation& state, const Topology& topology,
                                  const ErasureModel& erasure) {
  const int m = topology.num_devices();
  if (m > 14) {
    throw std::invalid_argument("full cooperation graph: more than 14 devices");
  }
  std::vector<IdSet> cohesive;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    IdSet members;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) members.insert(i + 1);
    }
    if (cluster_cohesive(topology, members)) cohesive.push_back(members);
  }
  std::sort(cohesive.begin(), cohesive.end(), IdSetLess{});

  std::vector<ClusterEvaluation> evals;
  evals.reserve(cohesive.size());
  for (const IdSet& members : cohesive) {
    evals.push_back(evaluate_cluster(state, topology, erasure, members));
  }
  return assemble(std::move(evals));
}

CooperationGraph build_pruned_graph(const SideInformation& state, const Topology& topology,
                                    const ErasureModel& erasure) {
  const int m = topology.num_devices();

  std::vector<ClusterEvaluation> evals;
  std::map<IdSet, int, IdSetLess> index_of;
  std::map<IdSet, ClusterEvaluation, IdSetLess> eval_cache;

  auto evaluated = [&](const IdSet& members) -> const ClusterEvaluation& {
    auto it = eval_cache.find(members);
    if (it == eval_cache.end()) {
      it = eval_cache.emplace(members, evaluate_cluster(state, topology, erasure, members))
               .first;
    }
    return it->second;
  };

  // Layer zero: every device as a singleton cluster.
  std::vector<int> layer;
  for (int i = 1; i <= m; ++i) {
    IdSet members{i};
    index_of.emplace(members, static_cast<int>(evals.size()));
    layer.push_back(static_cast<int>(evals.size()));
    evals.push_back(evaluated(members));
  }

  // A merged cluster stays cohesive exactly when the added device overlaps
  // the cluster's coverage. Accept a merge when it is at least as good as
  // both parts; equal-weight merges are kept. Re-derivable member sets are
  // deduplicated.
  const double kSlack = 1e-9;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int v : layer) {
      const IdSet base_members = evals[static_cast<std::size_t>(v)].cluster.members;
      const double base_weight = evals[static_cast<std::size_t>(v)].delay_weight();
      const IdSet base_cov = evals[static_cast<std::size_t>(v)].cluster.total_coverage;
      for (int z = 1; z <= m; ++z) {
        if (base_members.contains(z)) continue;
        if (!topology.coverage(z).intersects(base_cov)) continue;
        IdSet merged = base_members;
        merged.insert(z);
        if (index_of.count(merged) != 0) continue;
        const ClusterEvaluation& candidate = evaluated(merged);
        double singleton_weight = evals[static_cast<std::size_t>(z - 1)].delay_weight();
        if (candidate.delay_weight() + kSlack >= std::max(base_weight, singleton_weight)) {
          index_of.emplace(merged, static_cast<int>(evals.size()));
          next.push_back(static_cast<int>(evals.size()));
          evals.push_back(candidate);
        }
      }
    }
    layer = std::move(next);
  }

  return assemble(std::move(evals));
}

Schedule schedule_from_clique(const CooperationGraph& graph, const Clique& clique) {
  Schedule schedule;
  for (int v : clique.members) {
    const ClusterEvaluation& e = graph.clusters[static_cast<std::size_t>(v)];
    schedule.transmissions.insert(schedule.transmissions.end(), e.plans.begin(),
                                  e.plans.end());
  }
  std::sort(schedule.transmissions.begin(), schedule.transmissions.end(),
            [](const Transmission& a, const Transmission& b) { return a.sender < b.sender; });
  return schedule;
}

}  // namespace idnc
