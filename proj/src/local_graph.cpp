#include "idnc/local_graph.hpp"

#include <stdexcept>

namespace idnc {

namespace {

LocalIdncGraph build_graph_impl(const SideInformation& state, DeviceId owner,
                                const IdSet& owner_has, const IdSet& opportunity,
                                const std::vector<double>& reach_probability) {
  LocalIdncGraph local;
  local.owner = owner;
  local.opportunity = opportunity;

  for (int k : opportunity) {
    for (int l : state.wants(k) & owner_has) {
      local.vertices.emplace_back(k, l);
      local.graph.add_vertex(reach_probability[static_cast<std::size_t>(k - 1)],
                             std::to_string(k) + ":" + std::to_string(l));
    }
  }

  for (std::size_t a = 0; a < local.vertices.size(); ++a) {
    auto [k, l] = local.vertices[a];
    for (std::size_t b = a + 1; b < local.vertices.size(); ++b) {
      auto [m, n] = local.vertices[b];
      bool same_packet = (l == n);
      bool mutually_held = state.has(m).contains(l) && state.has(k).contains(n);
      if (same_packet || mutually_held) {
        local.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return local;
}

}  // namespace

LocalIdncGraph build_local_graph(const SideInformation& state, const Topology& topology,
                                 const ErasureModel& erasure, DeviceId i,
                                 const IdSet& opportunity) {
  IdSet reachable = topology.coverage(i);
  reachable.erase(i);
  if (!opportunity.is_subset_of(reachable)) {
    throw std::invalid_argument("local graph: opportunity outside the coverage zone");
  }
  std::vector<double> reach(static_cast<std::size_t>(state.num_devices()), 0.0);
  for (int k : opportunity) {
    reach[static_cast<std::size_t>(k - 1)] = 1.0 - erasure.d2d(i, k);
  }
  return build_graph_impl(state, i, state.has(i), opportunity, reach);
}

LocalIdncGraph build_base_station_graph(const SideInformation& state,
                                        const ErasureModel& erasure) {
  std::vector<double> reach(static_cast<std::size_t>(state.num_devices()), 0.0);
  for (int k : state.wanting_devices()) {
    reach[static_cast<std::size_t>(k - 1)] = 1.0 - erasure.bs(k);
  }
  return build_graph_impl(state, 0, state.frame(), state.wanting_devices(), reach);
}

CombinationChoice best_combination(const SideInformation& state, const LocalIdncGraph& local) {
  CombinationChoice choice;
  Clique clique = max_weight_clique(local.graph);
  for (int v : clique.members) {
    choice.combination.insert(local.vertices[static_cast<std::size_t>(v)].second);
  }
  if (!choice.combination.empty()) {
    // The decodable set can exceed the clique members only by devices with a
    // zero reception probability, so the gain still equals the clique weight.
    for (int k : local.opportunity) {
      if ((choice.combination & state.wants(k)).size() == 1) choice.targets.insert(k);
    }
  }
  choice.gain = clique.weight;
  return choice;
}

}  // namespace idnc
