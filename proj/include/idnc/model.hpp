#pragma once

#include <optional>
#include <vector>

#include "idnc/id_set.hpp"

namespace idnc {

using DeviceId = int;
using PacketId = int;

/// Per-device side information over a frame of packets: the packets a device
/// already holds and the ones it still wants. For every device the two sets
/// are disjoint and together cover the whole frame, and every packet of the
/// frame is held by at least one device.
class SideInformation {
 public:
  /// Builds side information from the per-device Has sets (index 0 -> device 1).
  /// Wants sets are the frame complements. Throws std::invalid_argument when
  /// the invariants do not hold.
  SideInformation(int num_devices, int num_packets, std::vector<IdSet> has);

  int num_devices() const { return num_devices_; }
  int num_packets() const { return num_packets_; }
  const IdSet& has(DeviceId i) const { return has_.at(static_cast<std::size_t>(i - 1)); }
  const IdSet& wants(DeviceId i) const { return wants_.at(static_cast<std::size_t>(i - 1)); }
  IdSet frame() const { return IdSet::full(num_packets_); }

  /// Devices with a non-empty Wants set.
  const IdSet& wanting_devices() const { return wanting_; }

  bool all_satisfied() const { return wanting_.empty(); }

  /// Copy of this state with packet l moved from device j's Wants to its Has.
  SideInformation with_packet_decoded(DeviceId j, PacketId l) const;

 private:
  int num_devices_ = 0;
  int num_packets_ = 0;
  std::vector<IdSet> has_;
  std::vector<IdSet> wants_;
  IdSet wanting_;
};

/// Symmetric connectivity over devices. Every device lies in its own coverage
/// zone and the induced graph is connected.
class Topology {
 public:
  /// Connectivity from an undirected edge list over devices 1..num_devices.
  /// Self edges are implied. Throws std::invalid_argument when the graph is
  /// not connected or an endpoint is out of range.
  static Topology from_edges(int num_devices,
                             const std::vector<std::pair<DeviceId, DeviceId>>& edges);

  /// Connectivity from per-device coverage zones (index 0 -> device 1).
  /// Validates symmetry, the self-coverage diagonal and connectedness.
  static Topology from_coverage(std::vector<IdSet> coverage);

  int num_devices() const { return static_cast<int>(coverage_.size()); }
  const IdSet& coverage(DeviceId i) const {
    return coverage_.at(static_cast<std::size_t>(i - 1));
  }
  bool connected(DeviceId i, DeviceId j) const { return coverage(i).contains(j); }
  IdSet all_devices() const { return IdSet::full(num_devices()); }

 private:
  explicit Topology(std::vector<IdSet> coverage) : coverage_(std::move(coverage)) {}
  std::vector<IdSet> coverage_;
};

/// Packet erasure probabilities: device-to-device matrix p(i,j) and
/// base-station-to-device vector q(i), all in [0,1].
class ErasureModel {
 public:
  ErasureModel(int num_devices, std::vector<double> d2d, std::vector<double> bs);

  static ErasureModel uniform(int num_devices, double d2d, double bs);

  int num_devices() const { return num_devices_; }
  double d2d(DeviceId from, DeviceId to) const {
    return d2d_[static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(num_devices_) +
                static_cast<std::size_t>(to - 1)];
  }
  double bs(DeviceId to) const { return bs_[static_cast<std::size_t>(to - 1)]; }

 private:
  int num_devices_;
  std::vector<double> d2d_;  // row-major M x M
  std::vector<double> bs_;   // length M
};

/// One transmitter's plan for a recovery slot: the XOR combination it sends
/// (as the set of source packets) and the devices meant to decode it.
struct Transmission {
  DeviceId sender = 0;  // 0 denotes the base station
  IdSet combination;
  IdSet targets;
};

/// A recovery-slot schedule: the set of transmitting devices with their packet
/// combinations, or a single base-station broadcast.
struct Schedule {
  std::vector<Transmission> transmissions;  // sorted by sender id
  bool base_station = false;

  bool empty() const { return transmissions.empty(); }
  IdSet transmitter_set() const {
    IdSet a;
    for (const auto& t : transmissions) {
      if (t.sender > 0) a.insert(t.sender);
    }
    return a;
  }
};

/// Cumulative realized decoding delay, one counter per device.
struct DelayTally {
  std::vector<long> per_device;

  explicit DelayTally(int num_devices)
      : per_device(static_cast<std::size_t>(num_devices), 0) {}
  void add(DeviceId i) { per_device[static_cast<std::size_t>(i - 1)] += 1; }
  long total() const {
    long t = 0;
    for (long d : per_device) t += d;
    return t;
  }
};

/// How a received XOR combination looks to one device.
enum class PacketClass {
  kNonInnovative,         // nothing new: no wanted packet inside
  kInstantlyDecodable,    // exactly one wanted packet inside
  kNonInstantlyDecodable  // two or more wanted packets inside
};

struct Classification {
  PacketClass kind = PacketClass::kNonInnovative;
  PacketId packet = 0;  // the decodable packet when kind == kInstantlyDecodable
};

/// Union of the coverage zones of the given devices.
IdSet total_coverage(const Topology& topology, const IdSet& devices);

/// Non-transmitting devices audible to two or more transmitters of A.
IdSet interference_set(const Topology& topology, const IdSet& transmitters);

/// Devices covered by no transmitter of A.
IdSet shadow_set(const Topology& topology, const IdSet& transmitters);

/// Devices transmitter i can usefully target: its coverage zone minus the
/// transmitters and the interfered devices. Requires i to be a transmitter.
IdSet opportunity_zone(const Topology& topology, const IdSet& transmitters, DeviceId i);

/// Classifies a combination for device j. The combination must be non-empty.
Classification classify_packet(const SideInformation& state, DeviceId j,
                               const IdSet& combination);

/// Applies a received combination at device j: moves the packet over when it
/// is instantly decodable, otherwise returns the state unchanged.
SideInformation decode(const SideInformation& state, DeviceId j, const IdSet& combination);

/// Expected total decoding-delay increase of one recovery slot.
///
/// Wanting transmitters, interfered and shadowed wanting devices each count a
/// full unit. A wanting device in an opportunity zone counts (1 - p) when it
/// is not targeted: it only pays when the useless packet actually arrives.
/// Targeted devices and devices with nothing left to want count zero. For a
/// base-station schedule only the untargeted wanting devices count, each with
/// weight (1 - q).
///
/// Throws std::invalid_argument when the schedule violates its invariants
/// (combinations outside the sender's Has set, targets outside the sender's
/// opportunity zone, or targets that cannot decode the combination).
double expected_delay(const SideInformation& state, const Topology& topology,
                      const ErasureModel& erasure, const Schedule& schedule);

/// Test oracle: checks that the per-transmitter opportunity zones (wanting
/// part), wanting transmitters, wanting interfered devices, wanting shadowed
/// devices and the delay-free devices partition the whole device set.
bool device_partition_check(const SideInformation& state, const Topology& topology,
                            const IdSet& transmitters);

}  // namespace idnc
