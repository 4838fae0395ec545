// Balanced b-ary hierarchy of fog nodes rooted at the cloud, and the
// bottom-up aggregation schedule along it.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hriot/node.hpp"

namespace hriot {

struct FogTree {
  NodeId root = 0;                 // cloud id
  std::uint32_t branching = 2;
  std::map<NodeId, NodeId> parent; // fog -> parent (fog or cloud)
  std::map<NodeId, int> depth;     // fog -> level, root fog is depth 1
  std::vector<NodeId> order;       // fogs in level-order placement

  bool contains(NodeId fog) const { return parent.count(fog) != 0; }
  int max_depth() const;
};

struct FogPayload {
  std::uint64_t packet_id = 0;
  double bits = 0.0;  // raw payload bits
};

struct EdgeSend {
  NodeId src = 0;                        // sending fog
  NodeId dst = 0;                        // parent fog or cloud
  double bits = 0.0;                     // header + ratio * sum of raw bits
  std::vector<std::uint64_t> packet_ids; // payloads carried on this edge
};

// Fogs sorted ascending by distance to cloud (ties by id) and placed in
// level order: fog 0 is the cloud's child, fog i hangs off fog (i-1)/b.
FogTree build_balanced_tree(const std::vector<NodeState>& fogs,
                            const NodeState& cloud, std::uint32_t branching);

// Parent chain from `fog` up to and including the cloud. Throws
// std::out_of_range for an unknown fog id.
std::vector<NodeId> path_to_root(const FogTree& tree, NodeId fog);

// One upward packet per fog per round, scheduled deepest level first so a
// parent's send carries everything its children delivered this round.
std::vector<EdgeSend> aggregate_upward(
    const FogTree& tree, const std::map<NodeId, std::vector<FogPayload>>& packets_at_fog,
    double aggregation_ratio, double header_bits);

}  // namespace hriot
