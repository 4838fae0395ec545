#include "hriot/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hriot {

std::pair<std::vector<Cluster>, MembershipMap> form_overlapping_clusters(
    const std::vector<NodeState>& nodes, const ScenarioConfig& config) {
  std::vector<const NodeState*> fogs;
  std::vector<const NodeState*> devices;
  for (const auto& n : nodes) {
    if (n.role == Role::Fog) fogs.push_back(&n);
    if (n.role == Role::Device && n.alive) devices.push_back(&n);
  }
  if (fogs.empty()) {
    throw ConfigError("cannot form clusters: scenario has no fog node");
  }

  std::vector<Cluster> clusters;
  clusters.reserve(fogs.size());
  MembershipMap membership;

  for (const auto* fog : fogs) {
    Cluster c;
    c.fog_anchor = fog->id;
    for (const auto* dev : devices) {
      if (distance(*dev, *fog) <= std::min(dev->comm_radius, fog->comm_radius)) {
        c.members.insert(dev->id);
        c.direct.insert(dev->id);
        membership.clusters_of[dev->id].push_back(clusters.size());
      }
    }
    clusters.push_back(std::move(c));
  }

  // Orphans attach through the nearest covered device within comm radius,
  // joining that relay's cluster(s).
  for (const auto* dev : devices) {
    if (membership.clusters_of.count(dev->id)) continue;

    const NodeState* relay = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const auto* other : devices) {
      if (other->id == dev->id) continue;
      if (!membership.clusters_of.count(other->id)) continue;
      const double d = distance(*dev, *other);
      if (d > std::min(dev->comm_radius, other->comm_radius)) continue;
      if (d < best || (d == best && relay && other->id < relay->id)) {
        best = d;
        relay = other;
      }
    }

    if (!relay) {
      membership.uncovered.insert(dev->id);
      continue;
    }
    for (std::size_t ci : membership.clusters_of.at(relay->id)) {
      // Only clusters where the relay is a direct member can carry the orphan.
      if (!clusters[ci].direct.count(relay->id)) continue;
      clusters[ci].members.insert(dev->id);
      clusters[ci].relay_of[dev->id] = relay->id;
      membership.clusters_of[dev->id].push_back(ci);
    }
    if (!membership.clusters_of.count(dev->id)) {
      membership.uncovered.insert(dev->id);
    }
  }
  return {std::move(clusters), std::move(membership)};
}

DecisionMatrix build_ch_decision_matrix(const Cluster& cluster,
                                        const std::vector<NodeState>& nodes,
                                        const ScenarioConfig& config) {
  const RadioModel radio = config.radio();
  const NodeState& fog = nodes.at(cluster.fog_anchor);

  DecisionMatrix m;
  m.rho = config.rho;
  m.criteria = {
      {"residual_energy", Direction::Benefit, config.weights[0]},
      {"rssi_to_fog", Direction::Benefit, config.weights[1]},
      {"let_to_fog", Direction::Benefit, config.weights[2]},
      {"distance_to_fog", Direction::Cost, config.weights[3]},
      {"hop_estimate", Direction::Cost, config.weights[4]},
      {"noise_figure", Direction::Cost, config.weights[5]},
  };

  for (NodeId id : cluster.members) {
    const NodeState& dev = nodes.at(id);
    if (!dev.alive) continue;
    const double d = distance(dev, fog);
    const double range = std::min(dev.comm_radius, fog.comm_radius);
    double let = link_expiration_time(dev, fog, range);
    let = std::min(let, config.let_cap_s);  // keep matrix entries finite
    // Direct members reach the fog tier in one hop as head; attached orphans
    // need their relay first.
    const double hops = cluster.relay_of.count(id) ? 2.0 : 1.0;
    m.candidates.push_back(id);
    m.values.push_back({dev.residual_energy, rssi(radio, d, dev.noise_figure), let,
                        d, hops, dev.noise_figure});
  }
  return m;
}

void elect_cluster_heads(std::vector<Cluster>& clusters,
                         const std::vector<NodeState>& nodes,
                         const ScenarioConfig& config, std::uint32_t epoch) {
  for (auto& cluster : clusters) {
    const DecisionMatrix m = build_ch_decision_matrix(cluster, nodes, config);
    if (m.candidates.empty()) {
      // No alive electable member; this cluster is skipped until the next
      // re-clustering pass.
      cluster.head.reset();
      cluster.head_grade = 0.0;
      cluster.epoch = epoch;
      continue;
    }
    const auto ranked = rank_candidates(m);
    cluster.head = ranked.front().id;
    cluster.head_grade = ranked.front().grade;
    cluster.epoch = epoch;
  }
}

std::optional<std::vector<NodeId>> intra_cluster_route(NodeId device,
                                                       const Cluster& cluster) {
  if (!cluster.head || !cluster.members.count(device)) return std::nullopt;
  const NodeId head = *cluster.head;
  if (device == head) return std::vector<NodeId>{head, cluster.fog_anchor};

  std::vector<NodeId> route;
  auto relay = cluster.relay_of.find(device);
  if (relay != cluster.relay_of.end() && relay->second != head) {
    route = {device, relay->second, head, cluster.fog_anchor};
  } else {
    route = {device, head, cluster.fog_anchor};
  }
  return route;
}

}  // namespace hriot
