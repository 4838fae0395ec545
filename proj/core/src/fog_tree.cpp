#include "hriot/fog_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace hriot {

int FogTree::max_depth() const {
  int d = 0;
  for (const auto& [fog, level] : depth) d = std::max(d, level);
  return d;
}

FogTree build_balanced_tree(const std::vector<NodeState>& fogs,
                            const NodeState& cloud, std::uint32_t branching) {
  if (branching < 1) throw std::invalid_argument("tree branching must be >= 1");

  FogTree tree;
  tree.root = cloud.id;
  tree.branching = branching;

  std::vector<const NodeState*> sorted;
  sorted.reserve(fogs.size());
  for (const auto& f : fogs) sorted.push_back(&f);
  std::sort(sorted.begin(), sorted.end(), [&](const NodeState* a, const NodeState* b) {
    const double da = distance(*a, cloud);
    const double db = distance(*b, cloud);
    if (da != db) return da < db;
    return a->id < b->id;
  });

  // Heap layout over the sorted order: slot 0 hangs off the cloud, slot i
  // off slot (i-1)/b. Closer fogs sit higher.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const NodeId id = sorted[i]->id;
    tree.order.push_back(id);
    if (i == 0) {
      tree.parent[id] = cloud.id;
      tree.depth[id] = 1;
    } else {
      const NodeId parent = sorted[(i - 1) / branching]->id;
      tree.parent[id] = parent;
      tree.depth[id] = tree.depth[parent] + 1;
    }
  }
  return tree;
}

std::vector<NodeId> path_to_root(const FogTree& tree, NodeId fog) {
  if (!tree.contains(fog)) {
    throw std::out_of_range("fog id not present in the fog tree");
  }
  std::vector<NodeId> path;
  NodeId current = fog;
  while (true) {
    path.push_back(current);
    if (current == tree.root) break;
    current = tree.parent.at(current);
  }
  return path;
}

std::vector<EdgeSend> aggregate_upward(
    const FogTree& tree, const std::map<NodeId, std::vector<FogPayload>>& packets_at_fog,
    double aggregation_ratio, double header_bits) {
  // Deepest level first, so each fog's upward packet already carries its
  // children's payloads of this round.
  std::vector<NodeId> fogs = tree.order;
  std::stable_sort(fogs.begin(), fogs.end(), [&](NodeId a, NodeId b) {
    const int da = tree.depth.at(a);
    const int db = tree.depth.at(b);
    if (da != db) return da > db;
    return a < b;
  });

  std::map<NodeId, std::vector<FogPayload>> pending;
  for (const auto& [fog, payloads] : packets_at_fog) {
    if (!tree.contains(fog)) {
      throw std::out_of_range("payloads addressed to a fog outside the tree");
    }
    pending[fog] = payloads;
  }

  std::vector<EdgeSend> schedule;
  for (NodeId fog : fogs) {
    auto it = pending.find(fog);
    if (it == pending.end() || it->second.empty()) continue;

    EdgeSend send;
    send.src = fog;
    send.dst = tree.parent.at(fog);
    double raw_bits = 0.0;
    for (const auto& p : it->second) {
      raw_bits += p.bits;
      send.packet_ids.push_back(p.packet_id);
    }
    send.bits = header_bits + aggregation_ratio * raw_bits;

    if (send.dst != tree.root) {
      auto& up = pending[send.dst];
      up.insert(up.end(), it->second.begin(), it->second.end());
    }
    pending.erase(it);
    schedule.push_back(std::move(send));
  }
  return schedule;
}

}  // namespace hriot
