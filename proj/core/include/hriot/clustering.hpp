// Phase 1: overlapping fog-anchored clusters and grey-relational cluster-head
// election.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hriot/config.hpp"
#include "hriot/grey.hpp"
#include "hriot/node.hpp"

namespace hriot {

struct Cluster {
  NodeId fog_anchor = 0;
  std::set<NodeId> members;              // direct members plus attached orphans
  std::set<NodeId> direct;               // members inside the fog radius
  std::map<NodeId, NodeId> relay_of;     // orphan -> covered member relaying it
  std::optional<NodeId> head;
  double head_grade = 0.0;               // grey grade the head won with
  std::uint32_t epoch = 0;               // re-election counter
};

struct MembershipMap {
  // device id -> indices into the cluster vector
  std::map<NodeId, std::vector<std::size_t>> clusters_of;
  std::set<NodeId> uncovered;
};

// All functions below expect `nodes` indexed by node id (nodes[i].id == i),
// the layout the Simulation builds: devices first, then fogs, cloud last.
//
// One cluster per fog. A device joins every fog within
// min(device_radius, fog_radius); a device covered by no fog attaches through
// the nearest covered device in its comm radius, else lands in `uncovered`.
// Dead devices are skipped. Throws ConfigError when no fog exists.
std::pair<std::vector<Cluster>, MembershipMap> form_overlapping_clusters(
    const std::vector<NodeState>& nodes, const ScenarioConfig& config);

// One row per alive member; six criteria:
//   residual energy (Benefit), RSSI to fog (Benefit), LET to fog (Benefit,
//   capped), distance to fog (Cost), hop estimate (Cost), noise figure (Cost).
DecisionMatrix build_ch_decision_matrix(const Cluster& cluster,
                                        const std::vector<NodeState>& nodes,
                                        const ScenarioConfig& config);

// Runs rank_candidates per cluster; head = top. Clusters with no electable
// member lose their head (and are skipped at send time).
void elect_cluster_heads(std::vector<Cluster>& clusters,
                         const std::vector<NodeState>& nodes,
                         const ScenarioConfig& config, std::uint32_t epoch);

// Hop list from `device` to the cluster's fog anchor:
//   head:            [head, fog]
//   direct member:   [device, head, fog]
//   attached orphan: [device, relay, head, fog]
// nullopt when the cluster has no head or the device is not a member.
std::optional<std::vector<NodeId>> intra_cluster_route(NodeId device,
                                                       const Cluster& cluster);

}  // namespace hriot
