#include "idnc/policies.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "idnc/local_graph.hpp"

namespace idnc {

std::string to_string(PolicyId id) {
  switch (id) {
    case PolicyId::kPmp: return "PMP";
    case PolicyId::kFcD2d: return "FC_D2D";
    case PolicyId::kPcHeuristic: return "PC_D2D_HEURISTIC";
    case PolicyId::kPcOptimal: return "PC_D2D_OPTIMAL";
    case PolicyId::kOracle: return "ORACLE";
  }
  throw std::logic_error("unknown policy id");
}

PolicyId policy_from_string(const std::string& name) {
  if (name == "PMP") return PolicyId::kPmp;
  if (name == "FC_D2D") return PolicyId::kFcD2d;
  if (name == "PC_D2D_HEURISTIC") return PolicyId::kPcHeuristic;
  if (name == "PC_D2D_OPTIMAL") return PolicyId::kPcOptimal;
  if (name == "ORACLE") return PolicyId::kOracle;
  throw std::invalid_argument("unknown policy name: " + name);
}

Schedule schedule_pc_optimal(const SideInformation& state, const Topology& topology,
                             const ErasureModel& erasure) {
  if (state.all_satisfied()) return Schedule{};
  CooperationGraph graph = build_pruned_graph(state, topology, erasure);
  return schedule_from_clique(graph, max_weight_clique(graph.graph));
}

Schedule schedule_pc_heuristic(const SideInformation& state, const Topology& topology,
                               const ErasureModel& erasure) {
  if (state.all_satisfied()) return Schedule{};
  CooperationGraph graph = singleton_graph(state, topology, erasure);
  return schedule_from_clique(graph, max_weight_clique(graph.graph));
}

Schedule schedule_fc(const SideInformation& state, const Topology& topology,
                     const ErasureModel& erasure) {
  if (state.all_satisfied()) return Schedule{};
  Schedule best;
  double best_delay = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= topology.num_devices(); ++i) {
    IdSet zone = topology.coverage(i);
    zone.erase(i);
    LocalIdncGraph local = build_local_graph(state, topology, erasure, i, zone);
    CombinationChoice choice = best_combination(state, local);
    Schedule candidate;
    candidate.transmissions.push_back(Transmission{i, choice.combination, choice.targets});
    double delay = expected_delay(state, topology, erasure, candidate);
    if (delay < best_delay) {
      best_delay = delay;
      best = std::move(candidate);
    }
  }
  return best;
}

Schedule schedule_pmp(const SideInformation& state, const ErasureModel& erasure) {
  if (state.all_satisfied()) return Schedule{};
  LocalIdncGraph bs_graph = build_base_station_graph(state, erasure);
  CombinationChoice choice = best_combination(state, bs_graph);
  Schedule schedule;
  schedule.base_station = true;
  schedule.transmissions.push_back(Transmission{0, choice.combination, choice.targets});
  return schedule;
}

namespace {

// All subsets of `elements`, ordered lexicographically as ascending id
// sequences (prefix before extension).
std::vector<IdSet> subsets_in_lex_order(const IdSet& elements) {
  std::vector<int> ids = elements.to_vector();
  // Depth-first expansion yields lexicographic order directly.
  struct Frame {
    IdSet prefix;
    std::size_t next;
  };
  std::vector<IdSet> out;
  std::vector<Frame> stack{{IdSet{}, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    out.push_back(f.prefix);
    // Push extensions in reverse so the smallest id is expanded first.
    for (std::size_t k = ids.size(); k > f.next; --k) {
      IdSet ext = f.prefix;
      ext.insert(ids[k - 1]);
      stack.push_back(Frame{ext, k});
    }
  }
  return out;
}

struct TransmitterPlan {
  Transmission transmission;
  double loss = 0.0;  // sum of (1 - p) over covered wanting devices left untargeted
};

TransmitterPlan best_plan_for(const SideInformation& state, const ErasureModel& erasure,
                              DeviceId i, const IdSet& zone) {
  const IdSet wanting_zone = zone & state.wanting_devices();
  TransmitterPlan best;
  best.transmission.sender = i;
  bool have = false;
  for (const IdSet& combo : subsets_in_lex_order(state.has(i))) {
    IdSet targets;
    if (!combo.empty()) {
      for (int j : wanting_zone) {
        if ((combo & state.wants(j)).size() == 1) targets.insert(j);
      }
    }
    double loss = 0.0;
    for (int j : wanting_zone - targets) loss += 1.0 - erasure.d2d(i, j);
    if (!have || loss < best.loss) {
      have = true;
      best.loss = loss;
      best.transmission = Transmission{i, combo, targets};
    }
  }
  return best;
}

}  // namespace

Schedule schedule_oracle(const SideInformation& state, const Topology& topology,
                         const ErasureModel& erasure) {
  if (state.num_devices() > 8 || state.num_packets() > 4) {
    throw std::invalid_argument("oracle: limited to 8 devices and 4 packets");
  }
  if (state.all_satisfied()) return Schedule{};

  const IdSet wanting = state.wanting_devices();
  Schedule best;
  double best_delay = static_cast<double>(wanting.size());  // empty schedule
  IdSet best_set;

  for (const IdSet& a : subsets_in_lex_order(topology.all_devices())) {
    if (a.empty()) continue;
    IdSet interfered = interference_set(topology, a);
    IdSet shadowed = shadow_set(topology, a);
    double delay = (a & wanting).size() + (interfered & wanting).size() +
                   (shadowed & wanting).size();
    Schedule candidate;
    const IdSet blocked = a | interfered;
    for (int i : a) {
      TransmitterPlan plan =
          best_plan_for(state, erasure, i, topology.coverage(i) - blocked);
      delay += plan.loss;
      candidate.transmissions.push_back(plan.transmission);
    }
    if (delay < best_delay || (delay == best_delay && lex_less(a, best_set))) {
      best_delay = delay;
      best = std::move(candidate);
      best_set = a;
    }
  }
  return best;
}

Schedule make_schedule(PolicyId policy, const SideInformation& state,
                       const Topology& topology, const ErasureModel& erasure) {
  switch (policy) {
    case PolicyId::kPmp: return schedule_pmp(state, erasure);
    case PolicyId::kFcD2d: return schedule_fc(state, topology, erasure);
    case PolicyId::kPcHeuristic: return schedule_pc_heuristic(state, topology, erasure);
    case PolicyId::kPcOptimal: return schedule_pc_optimal(state, topology, erasure);
    case PolicyId::kOracle: return schedule_oracle(state, topology, erasure);
  }
  throw std::logic_error("unknown policy id");
}

}  // namespace idnc
