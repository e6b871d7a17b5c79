#include "idnc/model.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace idnc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

SideInformation::SideInformation(int num_devices, int num_packets, std::vector<IdSet> has)
    : num_devices_(num_devices), num_packets_(num_packets), has_(std::move(has)) {
  require(num_devices >= 1 && num_devices <= IdSet::kMaxId, "side info: bad device count");
  require(num_packets >= 0 && num_packets <= IdSet::kMaxId, "side info: bad packet count");
  require(static_cast<int>(has_.size()) == num_devices,
          "side info: one Has set per device required");

  IdSet frame = IdSet::full(num_packets);
  IdSet held_somewhere;
  wants_.resize(has_.size());
  for (int i = 0; i < num_devices; ++i) {
    require(has_[static_cast<std::size_t>(i)].is_subset_of(frame),
            "side info: Has set outside the frame");
    wants_[static_cast<std::size_t>(i)] = frame - has_[static_cast<std::size_t>(i)];
    held_somewhere |= has_[static_cast<std::size_t>(i)];
    if (!wants_[static_cast<std::size_t>(i)].empty()) wanting_.insert(i + 1);
  }
  require(held_somewhere == frame, "side info: every packet must be held by some device");
}

SideInformation SideInformation::with_packet_decoded(DeviceId j, PacketId l) const {
  SideInformation next = *this;
  std::size_t idx = static_cast<std::size_t>(j - 1);
  require(next.wants_[idx].contains(l), "decode: packet is not wanted by the device");
  next.wants_[idx].erase(l);
  next.has_[idx].insert(l);
  if (next.wants_[idx].empty()) next.wanting_.erase(j);
  return next;
}

Topology Topology::from_edges(int num_devices,
                              const std::vector<std::pair<DeviceId, DeviceId>>& edges) {
  require(num_devices >= 1 && num_devices <= IdSet::kMaxId, "topology: bad device count");
  std::vector<IdSet> coverage(static_cast<std::size_t>(num_devices));
  for (int i = 1; i <= num_devices; ++i) coverage[static_cast<std::size_t>(i - 1)].insert(i);
  for (auto [a, b] : edges) {
    require(a >= 1 && a <= num_devices && b >= 1 && b <= num_devices,
            "topology: edge endpoint out of range");
    coverage[static_cast<std::size_t>(a - 1)].insert(b);
    coverage[static_cast<std::size_t>(b - 1)].insert(a);
  }
  return from_coverage(std::move(coverage));
}

Topology Topology::from_coverage(std::vector<IdSet> coverage) {
  int m = static_cast<int>(coverage.size());
  require(m >= 1 && m <= IdSet::kMaxId, "topology: bad device count");
  IdSet all = IdSet::full(m);
  for (int i = 1; i <= m; ++i) {
    const IdSet& ci = coverage[static_cast<std::size_t>(i - 1)];
    require(ci.is_subset_of(all), "topology: coverage outside device range");
    require(ci.contains(i), "topology: every device covers itself");
    for (int j : ci) {
      require(coverage[static_cast<std::size_t>(j - 1)].contains(i),
              "topology: connectivity must be symmetric");
    }
  }
  // Connectedness of the induced graph.
  IdSet seen;
  std::queue<int> frontier;
  frontier.push(1);
  seen.insert(1);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int u : coverage[static_cast<std::size_t>(v - 1)]) {
      if (!seen.contains(u)) {
        seen.insert(u);
        frontier.push(u);
      }
    }
  }
  require(seen == all, "topology: connectivity graph must be connected");
  return Topology(std::move(coverage));
}

ErasureModel::ErasureModel(int num_devices, std::vector<double> d2d, std::vector<double> bs)
    : num_devices_(num_devices), d2d_(std::move(d2d)), bs_(std::move(bs)) {
  require(num_devices >= 1 && num_devices <= IdSet::kMaxId, "erasure: bad device count");
  require(d2d_.size() ==
              static_cast<std::size_t>(num_devices) * static_cast<std::size_t>(num_devices),
          "erasure: d2d matrix must be M x M");
  require(bs_.size() == static_cast<std::size_t>(num_devices),
          "erasure: bs vector must have length M");
  for (double p : d2d_) require(p >= 0.0 && p <= 1.0, "erasure: d2d probability outside [0,1]");
  for (double q : bs_) require(q >= 0.0 && q <= 1.0, "erasure: bs probability outside [0,1]");
}

ErasureModel ErasureModel::uniform(int num_devices, double d2d, double bs) {
  std::size_t m = static_cast<std::size_t>(num_devices);
  return ErasureModel(num_devices, std::vector<double>(m * m, d2d), std::vector<double>(m, bs));
}

IdSet total_coverage(const Topology& topology, const IdSet& devices) {
  IdSet cov;
  for (int i : devices) cov |= topology.coverage(i);
  return cov;
}

IdSet interference_set(const Topology& topology, const IdSet& transmitters) {
  IdSet seen_once;
  IdSet seen_multi;
  for (int i : transmitters) {
    seen_multi |= seen_once & topology.coverage(i);
    seen_once |= topology.coverage(i);
  }
  return seen_multi - transmitters;
}

IdSet shadow_set(const Topology& topology, const IdSet& transmitters) {
  return topology.all_devices() - total_coverage(topology, transmitters);
}

IdSet opportunity_zone(const Topology& topology, const IdSet& transmitters, DeviceId i) {
  if (!transmitters.contains(i)) {
    throw std::invalid_argument("opportunity_zone: device is not transmitting");
  }
  return topology.coverage(i) - (transmitters | interference_set(topology, transmitters));
}

Classification classify_packet(const SideInformation& state, DeviceId j,
                               const IdSet& combination) {
  if (combination.empty()) {
    throw std::invalid_argument("classify_packet: empty combination");
  }
  IdSet wanted = combination & state.wants(j);
  switch (wanted.size()) {
    case 0:
      return {PacketClass::kNonInnovative, 0};
    case 1:
      return {PacketClass::kInstantlyDecodable, wanted.first()};
    default:
      return {PacketClass::kNonInstantlyDecodable, 0};
  }
}

SideInformation decode(const SideInformation& state, DeviceId j, const IdSet& combination) {
  Classification c = classify_packet(state, j, combination);
  if (c.kind != PacketClass::kInstantlyDecodable) return state;
  return state.with_packet_decoded(j, c.packet);
}

namespace {

void validate_d2d_schedule(const SideInformation& state, const Topology& topology,
                           const Schedule& schedule) {
  IdSet transmitters = schedule.transmitter_set();
  require(static_cast<int>(schedule.transmissions.size()) == transmitters.size(),
          "schedule: duplicate or base-station senders in a d2d schedule");
  for (const auto& t : schedule.transmissions) {
    require(t.sender >= 1 && t.sender <= state.num_devices(), "schedule: sender out of range");
    require(t.combination.is_subset_of(state.has(t.sender)),
            "schedule: combination not drawn from the sender's Has set");
    IdSet zone = opportunity_zone(topology, transmitters, t.sender);
    require(t.targets.is_subset_of(zone), "schedule: target outside the opportunity zone");
    for (int j : t.targets) {
      require((t.combination & state.wants(j)).size() == 1,
              "schedule: combination not instantly decodable for a target");
    }
  }
}

}  // namespace

double expected_delay(const SideInformation& state, const Topology& topology,
                      const ErasureModel& erasure, const Schedule& schedule) {
  const IdSet wanting = state.wanting_devices();

  if (schedule.base_station) {
    require(schedule.transmissions.size() == 1, "schedule: one base-station transmission");
    const Transmission& t = schedule.transmissions.front();
    require(t.sender == 0, "schedule: base-station sender id must be 0");
    require(t.combination.is_subset_of(state.frame()), "schedule: combination outside frame");
    for (int j : t.targets) {
      require(wanting.contains(j), "schedule: base-station target wants nothing");
      require((t.combination & state.wants(j)).size() == 1,
              "schedule: combination not instantly decodable for a target");
    }
    double d = 0.0;
    for (int j : wanting - t.targets) d += 1.0 - erasure.bs(j);
    return d;
  }

  validate_d2d_schedule(state, topology, schedule);

  IdSet transmitters = schedule.transmitter_set();
  IdSet interfered = interference_set(topology, transmitters);
  IdSet shadowed = shadow_set(topology, transmitters);

  double d = 0.0;
  d += (transmitters & wanting).size();
  d += (interfered & wanting).size();
  d += (shadowed & wanting).size();
  for (const auto& t : schedule.transmissions) {
    IdSet zone = opportunity_zone(topology, transmitters, t.sender);
    for (int j : (zone & wanting) - t.targets) d += 1.0 - erasure.d2d(t.sender, j);
  }
  return d;
}

bool device_partition_check(const SideInformation& state, const Topology& topology,
                            const IdSet& transmitters) {
  const IdSet wanting = state.wanting_devices();
  std::vector<IdSet> parts;
  for (int i : transmitters) {
    parts.push_back(opportunity_zone(topology, transmitters, i) & wanting);
  }
  parts.push_back(transmitters & wanting);
  parts.push_back(interference_set(topology, transmitters) & wanting);
  parts.push_back(shadow_set(topology, transmitters) & wanting);
  parts.push_back(topology.all_devices() - wanting);

  IdSet seen;
  for (const IdSet& p : parts) {
    if (seen.intersects(p)) return false;
    seen |= p;
  }
  return seen == topology.all_devices();
}

}  // namespace idnc
