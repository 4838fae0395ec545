// Deterministic round-based engine: traffic generation, per-hop energy and
// loss accounting, fog-tier aggregation, metrics.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hriot/clustering.hpp"
#include "hriot/config.hpp"
#include "hriot/fog_tree.hpp"
#include "hriot/node.hpp"
#include "hriot/rng.hpp"

namespace hriot {

enum class DropReason { None, NoRoute, LinkLoss, DeadNode };

struct HopRecord {
  NodeId from = 0;
  NodeId to = 0;
  double distance = 0.0;
  double at = 0.0;  // arrival time at `to`, seconds since run start
};

struct Packet {
  std::uint64_t id = 0;
  NodeId src_device = 0;
  double created_at = 0.0;
  double bits = 0.0;
  std::vector<HopRecord> path;
  std::optional<double> delivered_at;
  std::optional<double> response_at;
  DropReason dropped_reason = DropReason::None;
};

struct MetricsLedger {
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  double sum_delay_s = 0.0;
  double sum_response_s = 0.0;
  std::optional<std::uint32_t> first_node_death_round;
  std::vector<std::uint32_t> alive_curve;  // alive devices at end of each round
  double energy_consumed_j = 0.0;
  std::map<NodeId, double> energy_audit;   // per-node consumed joules
};

struct Summary {
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  std::optional<double> pdr;             // absent when sent == 0 ("no traffic")
  std::optional<double> mean_delay_s;    // absent when delivered == 0
  std::optional<double> mean_response_s;
  std::optional<std::uint32_t> first_node_death_round;
  std::vector<std::uint32_t> alive_curve;
  double energy_consumed_j = 0.0;
};

// bits/bandwidth + d/c + per-hop processing constant.
double per_hop_latency(const ScenarioConfig& config, double bits, double d);

// 0 below the receiver sensitivity, 1 - base_loss otherwise.
double link_success_probability(double rssi_dbm, double sensitivity_dbm,
                                double base_loss);

Summary finalize_metrics(const MetricsLedger& ledger);

class Simulation {
 public:
  Simulation(ScenarioConfig config, Protocol protocol, std::uint64_t seed);

  void run_round();
  void run_all();
  bool finished() const;

  const ScenarioConfig& config() const { return config_; }
  Protocol protocol() const { return protocol_; }
  const MetricsLedger& ledger() const { return ledger_; }
  const std::vector<NodeState>& nodes() const { return nodes_; }
  const FogTree& tree() const { return tree_; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  const MembershipMap& membership() const { return membership_; }
  // Packets generated during the most recent round (delivered or dropped).
  const std::vector<Packet>& last_round_packets() const { return round_packets_; }
  // EECRP-like partition of the most recent round (cluster -> member ids).
  const std::vector<std::vector<NodeId>>& eecrp_partition() const { return partition_; }
  std::uint32_t round() const { return round_; }
  std::uint32_t alive_devices() const;

 private:
  void build_topology(std::uint64_t seed);
  void update_mobility();
  void record_round_end();
  unsigned packets_this_round();

  // Charges `node` up to `joules`; kills a device whose battery empties.
  // Returns false when the node died paying (insufficient energy).
  bool charge(NodeId node, double joules);
  void on_device_death(NodeId node);

  // Sends `packet` one hop; deducts tx/rx energy, runs the loss trial,
  // advances the packet clock. Returns false when the packet is dropped.
  bool transmit_hop(Packet& packet, NodeId from, NodeId to, double& clock);

  void run_round_hriot();
  void run_round_direct();
  void run_round_eecrp_like();
  void run_round_ergid_like();

  void ensure_clusters_hriot();
  std::optional<std::size_t> pick_cluster_for(NodeId device) const;
  void fog_tier_forward(std::map<NodeId, std::vector<FogPayload>>& inbox,
                        std::map<std::uint64_t, std::size_t>& packet_index);
  void deliver(Packet& packet, double at);

  // EECRP-like auxiliary state
  void ensure_clusters_eecrp();
  std::vector<Vec2> centroids_;
  std::vector<std::vector<NodeId>> partition_;
  std::vector<std::optional<NodeId>> partition_heads_;

  ScenarioConfig config_;
  Protocol protocol_;
  RadioModel radio_;
  std::vector<NodeState> nodes_;  // devices, then fogs, then cloud (id == index)
  NodeId cloud_id_ = 0;
  std::vector<NodeId> fog_ids_;
  FogTree tree_;
  std::vector<Cluster> clusters_;
  MembershipMap membership_;
  bool clusters_valid_ = false;
  Rng rng_;
  MetricsLedger ledger_;
  std::vector<Packet> round_packets_;
  std::uint64_t next_packet_id_ = 0;
  std::uint32_t round_ = 0;
};

MetricsLedger run_scenario(const ScenarioConfig& config, Protocol protocol,
                           std::uint64_t seed);

}  // namespace hriot
