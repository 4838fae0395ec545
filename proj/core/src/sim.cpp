#include "hriot/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hriot/baselines.hpp"

namespace hriot {

namespace {
constexpr double kSpeedOfLight = 3e8;  // m/s
}

double per_hop_latency(const ScenarioConfig& config, double bits, double d) {
  return bits / config.bandwidth_bps + d / kSpeedOfLight + config.proc_delay_s;
}

double link_success_probability(double rssi_dbm, double sensitivity_dbm,
                                double base_loss) {
  if (rssi_dbm < sensitivity_dbm) return 0.0;
  return 1.0 - base_loss;
}

Summary finalize_metrics(const MetricsLedger& ledger) {
  Summary s;
  s.sent = ledger.sent;
  s.delivered = ledger.delivered;
  if (ledger.sent > 0) {
    s.pdr = static_cast<double>(ledger.delivered) / static_cast<double>(ledger.sent);
  }
  if (ledger.delivered > 0) {
    s.mean_delay_s = ledger.sum_delay_s / static_cast<double>(ledger.delivered);
    s.mean_response_s = ledger.sum_response_s / static_cast<double>(ledger.delivered);
  }
  s.first_node_death_round = ledger.first_node_death_round;
  s.alive_curve = ledger.alive_curve;
  s.energy_consumed_j = ledger.energy_consumed_j;
  return s;
}

Simulation::Simulation(ScenarioConfig config, Protocol protocol, std::uint64_t seed)
    : config_(std::move(config)), protocol_(protocol), rng_(seed) {
  config_.validate();
  radio_ = config_.radio();
  build_topology(seed);
}

void Simulation::build_topology(std::uint64_t /*seed*/) {
  const std::uint32_t devices = config_.device_count;
  const std::uint32_t fogs = config_.fog_count;
  nodes_.reserve(devices + fogs + 1);

  for (std::uint32_t i = 0; i < devices; ++i) {
    NodeState n;
    n.id = i;
    n.role = Role::Device;
    n.position = {rng_.uniform(0.0, config_.area_width),
                  rng_.uniform(0.0, config_.area_height)};
    n.noise_figure = rng_.uniform(0.0, config_.max_noise_db);
    if (config_.max_speed_mps > 0.0) {
      const double angle = rng_.uniform(0.0, 2.0 * M_PI);
      const double speed = rng_.uniform(0.0, config_.max_speed_mps);
      n.velocity = {speed * std::cos(angle), speed * std::sin(angle)};
    }
    n.initial_energy = config_.initial_energy_j;
    n.residual_energy = config_.initial_energy_j;
    n.comm_radius = config_.device_radius_m;
    n.alive = config_.initial_energy_j > 0.0;
    ledger_.energy_audit[n.id] = 0.0;
    nodes_.push_back(n);
  }

  // Fogs on an even grid unless explicit positions were configured.
  const std::uint32_t cols =
      fogs ? static_cast<std::uint32_t>(std::ceil(std::sqrt(double(fogs)))) : 1;
  const std::uint32_t rows = fogs ? (fogs + cols - 1) / cols : 1;
  for (std::uint32_t i = 0; i < fogs; ++i) {
    NodeState n;
    n.id = devices + i;
    n.role = Role::Fog;
    if (!config_.fog_positions.empty()) {
      n.position = config_.fog_positions[i];
    } else {
      n.position = {(i % cols + 0.5) * config_.area_width / cols,
                    (i / cols + 0.5) * config_.area_height / rows};
    }
    n.comm_radius = config_.fog_radius_m;
    fog_ids_.push_back(n.id);
    nodes_.push_back(n);
  }

  NodeState cloud;
  cloud.id = devices + fogs;
  cloud.role = Role::Cloud;
  cloud.position = config_.cloud_position();
  cloud.comm_radius = config_.fog_radius_m;
  cloud_id_ = cloud.id;
  nodes_.push_back(cloud);

  std::vector<NodeState> fog_nodes;
  for (NodeId f : fog_ids_) fog_nodes.push_back(nodes_[f]);
  tree_ = build_balanced_tree(fog_nodes, nodes_[cloud_id_], config_.branching);
}

std::uint32_t Simulation::alive_devices() const {
  std::uint32_t n = 0;
  for (const auto& node : nodes_) {
    if (node.is_device() && node.alive) ++n;
  }
  return n;
}

bool Simulation::finished() const {
  return round_ >= config_.rounds || alive_devices() == 0;
}

void Simulation::run_all() {
  while (!finished()) run_round();
}

void Simulation::update_mobility() {
  const double dt = config_.round_duration_s;
  for (auto& n : nodes_) {
    if (!n.is_device() || !n.alive) continue;
    n.position.x += n.velocity.x * dt;
    n.position.y += n.velocity.y * dt;
    // reflect at area boundaries
    if (n.position.x < 0.0) { n.position.x = -n.position.x; n.velocity.x = -n.velocity.x; }
    if (n.position.x > config_.area_width) {
      n.position.x = 2.0 * config_.area_width - n.position.x;
      n.velocity.x = -n.velocity.x;
    }
    if (n.position.y < 0.0) { n.position.y = -n.position.y; n.velocity.y = -n.velocity.y; }
    if (n.position.y > config_.area_height) {
      n.position.y = 2.0 * config_.area_height - n.position.y;
      n.velocity.y = -n.velocity.y;
    }
  }
}

unsigned Simulation::packets_this_round() {
  if (config_.traffic_model == TrafficModel::Constant) return 1;
  return rng_.poisson(config_.traffic_rate);
}

void Simulation::on_device_death(NodeId /*node*/) {
  if (!ledger_.first_node_death_round) {
    ledger_.first_node_death_round = round_;
  }
}

bool Simulation::charge(NodeId node, double joules) {
  NodeState& n = nodes_[node];
  if (!n.energy_constrained() || joules <= 0.0) return true;

  const bool full = n.residual_energy >= joules;
  const double take = full ? joules : n.residual_energy;
  n.residual_energy -= take;
  ledger_.energy_audit[node] += take;
  ledger_.energy_consumed_j += take;
  if (!full) n.residual_energy = 0.0;
  if (n.residual_energy <= 0.0 && n.alive) {
    n.residual_energy = 0.0;
    n.alive = false;
    on_device_death(node);
  }
  return full;
}

bool Simulation::transmit_hop(Packet& packet, NodeId from, NodeId to, double& clock) {
  const NodeState& sender = nodes_[from];
  const NodeState& receiver = nodes_[to];
  if (sender.is_device() && !sender.alive) {
    packet.dropped_reason = DropReason::DeadNode;
    return false;
  }
  if (receiver.is_device() && !receiver.alive) {
    packet.dropped_reason = DropReason::DeadNode;
    return false;
  }

  const double d = distance(sender, receiver);
  if (!charge(from, tx_energy(radio_, packet.bits, d))) {
    packet.dropped_reason = DropReason::DeadNode;
    return false;
  }

  // Wireless loss trial on device-originated hops; the fog tier is wired.
  if (sender.is_device()) {
    const double p = link_success_probability(
        rssi(radio_, d, receiver.noise_figure), radio_.rx_sensitivity_dbm,
        config_.base_loss);
    if (!rng_.bernoulli(p)) {
      packet.dropped_reason = DropReason::LinkLoss;
      return false;
    }
  }

  if (!charge(to, rx_energy(radio_, packet.bits))) {
    packet.dropped_reason = DropReason::DeadNode;
    return false;
  }

  clock += per_hop_latency(config_, packet.bits, d);
  packet.path.push_back({from, to, d, clock});
  return true;
}

void Simulation::deliver(Packet& packet, double at) {
  packet.delivered_at = at;
  ledger_.delivered += 1;
  ledger_.sum_delay_s += at - packet.created_at;

  // Response retraces the forward route with the packet's own size.
  double return_delay = 0.0;
  for (auto it = packet.path.rbegin(); it != packet.path.rend(); ++it) {
    return_delay += per_hop_latency(config_, packet.bits, it->distance);
  }
  packet.response_at = at + config_.cloud_proc_s + return_delay;
  ledger_.sum_response_s += *packet.response_at - packet.created_at;
}

void Simulation::record_round_end() {
  ledger_.alive_curve.push_back(alive_devices());
}

void Simulation::run_round() {
  round_packets_.clear();
  update_mobility();
  switch (protocol_) {
    case Protocol::HRIOT: run_round_hriot(); break;
    case Protocol::DIRECT: run_round_direct(); break;
    case Protocol::EECRP_LIKE: run_round_eecrp_like(); break;
    case Protocol::ERGID_LIKE: run_round_ergid_like(); break;
  }
  record_round_end();
  ++round_;
}

// ---------------------------------------------------------------------------
// HR-IoT

void Simulation::ensure_clusters_hriot() {
  if (!clusters_valid_ || round_ % config_.reelection_period == 0) {
    auto [clusters, membership] = form_overlapping_clusters(nodes_, config_);
    clusters_ = std::move(clusters);
    membership_ = std::move(membership);
    elect_cluster_heads(clusters_, nodes_, config_, round_);
    clusters_valid_ = true;
    return;
  }
  // Heads that died since the last election are replaced immediately.
  for (auto& cluster : clusters_) {
    if (cluster.head && !nodes_[*cluster.head].alive) {
      const DecisionMatrix m = build_ch_decision_matrix(cluster, nodes_, config_);
      if (m.candidates.empty()) {
        cluster.head.reset();
        cluster.head_grade = 0.0;
      } else {
        const auto ranked = rank_candidates(m);
        cluster.head = ranked.front().id;
        cluster.head_grade = ranked.front().grade;
      }
      cluster.epoch = round_;
    }
  }
}

std::optional<std::size_t> Simulation::pick_cluster_for(NodeId device) const {
  auto it = membership_.clusters_of.find(device);
  if (it == membership_.clusters_of.end()) return std::nullopt;

  std::optional<std::size_t> best;
  for (std::size_t ci : it->second) {
    const Cluster& c = clusters_[ci];
    if (!c.head || !nodes_[*c.head].alive) continue;
    if (!best || c.head_grade > clusters_[*best].head_grade ||
        (c.head_grade == clusters_[*best].head_grade &&
         c.fog_anchor < clusters_[*best].fog_anchor)) {
      best = ci;
    }
  }
  return best;
}

void Simulation::fog_tier_forward(std::map<NodeId, std::vector<FogPayload>>& inbox,
                                  std::map<std::uint64_t, std::size_t>& packet_index) {
  const auto schedule =
      aggregate_upward(tree_, inbox, config_.aggregation_ratio, config_.header_bits);
  for (const auto& send : schedule) {
    const double d = distance(nodes_[send.src], nodes_[send.dst]);
    const double lat = per_hop_latency(config_, send.bits, d);
    for (std::uint64_t pid : send.packet_ids) {
      Packet& p = round_packets_[packet_index.at(pid)];
      const double at = p.path.back().at + lat;
      p.path.push_back({send.src, send.dst, d, at});
      if (send.dst == cloud_id_) deliver(p, at);
    }
  }
}

void Simulation::run_round_hriot() {
  ensure_clusters_hriot();

  const double now = round_ * config_.round_duration_s;
  std::map<NodeId, std::vector<FogPayload>> inbox;
  std::map<std::uint64_t, std::size_t> packet_index;

  for (NodeId dev = 0; dev < config_.device_count; ++dev) {
    if (!nodes_[dev].alive) continue;
    const unsigned count = packets_this_round();
    for (unsigned k = 0; k < count; ++k) {
      std::vector<std::size_t> targets;
      if (config_.duplicate_to_all_overlaps) {
        auto it = membership_.clusters_of.find(dev);
        if (it != membership_.clusters_of.end()) {
          for (std::size_t ci : it->second) {
            const Cluster& c = clusters_[ci];
            if (c.head && nodes_[*c.head].alive) targets.push_back(ci);
          }
        }
      } else if (auto ci = pick_cluster_for(dev)) {
        targets.push_back(*ci);
      }

      if (targets.empty()) {
        Packet p{next_packet_id_++, dev, now, config_.packet_bits};
        p.dropped_reason = DropReason::NoRoute;
        ledger_.sent += 1;
        round_packets_.push_back(std::move(p));
        continue;
      }

      // Under duplicate_to_all_overlaps each copy counts as its own packet.
      for (std::size_t ci : targets) {
        Packet p{next_packet_id_++, dev, now, config_.packet_bits};
        ledger_.sent += 1;
        double clock = now;

        const auto route = intra_cluster_route(dev, clusters_[ci]);
        bool arrived = false;
        if (!route) {
          p.dropped_reason = DropReason::NoRoute;
        } else {
          arrived = true;
          for (std::size_t h = 0; h + 1 < route->size(); ++h) {
            if (!transmit_hop(p, (*route)[h], (*route)[h + 1], clock)) {
              arrived = false;
              break;
            }
          }
        }
        if (arrived) {
          inbox[clusters_[ci].fog_anchor].push_back({p.id, p.bits});
          packet_index[p.id] = round_packets_.size();
        }
        round_packets_.push_back(std::move(p));
      }
    }
  }

  fog_tier_forward(inbox, packet_index);
}

// ---------------------------------------------------------------------------
// DIRECT

void Simulation::run_round_direct() {
  const double now = round_ * config_.round_duration_s;
  for (NodeId dev = 0; dev < config_.device_count; ++dev) {
    if (!nodes_[dev].alive) continue;
    const unsigned count = packets_this_round();
    for (unsigned k = 0; k < count; ++k) {
      Packet p{next_packet_id_++, dev, now, config_.packet_bits};
      ledger_.sent += 1;
      double clock = now;
      if (transmit_hop(p, dev, cloud_id_, clock)) deliver(p, clock);
      round_packets_.push_back(std::move(p));
    }
  }
}

// ---------------------------------------------------------------------------
// EECRP-like

void Simulation::ensure_clusters_eecrp() {
  const std::size_t k = std::max<std::size_t>(1, fog_ids_.size());
  const bool reform = centroids_.empty() || round_ % config_.reelection_period == 0;

  if (reform) {
    if (centroids_.empty()) {
      for (NodeId f : fog_ids_) centroids_.push_back(nodes_[f].position);
      if (centroids_.empty()) centroids_.push_back(nodes_[cloud_id_].position);
    }
    partition_.assign(k, {});
    for (NodeId dev = 0; dev < config_.device_count; ++dev) {
      if (!nodes_[dev].alive) continue;
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = norm(nodes_[dev].position - centroids_[c]);
        if (d < best_d) { best_d = d; best = c; }
      }
      partition_[best].push_back(dev);
    }
    // one Lloyd step: recenter each non-empty cluster on its members
    for (std::size_t c = 0; c < k; ++c) {
      if (partition_[c].empty()) continue;
      Vec2 mean{0.0, 0.0};
      for (NodeId dev : partition_[c]) {
        mean.x += nodes_[dev].position.x;
        mean.y += nodes_[dev].position.y;
      }
      centroids_[c] = {mean.x / partition_[c].size(), mean.y / partition_[c].size()};
    }
    partition_heads_.assign(k, std::nullopt);
  }

  for (std::size_t c = 0; c < partition_.size(); ++c) {
    const bool head_ok = partition_heads_[c] && nodes_[*partition_heads_[c]].alive;
    if (head_ok) continue;
    partition_heads_[c].reset();
    double best_score = -1.0;
    for (NodeId dev : partition_[c]) {
      if (!nodes_[dev].alive) continue;
      const double score = eecrp_ch_score(nodes_[dev].residual_energy,
                                          norm(nodes_[dev].position - centroids_[c]));
      if (score > best_score) {
        best_score = score;
        partition_heads_[c] = dev;
      }
    }
  }
}

void Simulation::run_round_eecrp_like() {
  ensure_clusters_eecrp();

  const double now = round_ * config_.round_duration_s;
  std::vector<std::size_t> cluster_of(config_.device_count, 0);
  std::vector<bool> assigned(config_.device_count, false);
  for (std::size_t c = 0; c < partition_.size(); ++c) {
    for (NodeId dev : partition_[c]) {
      cluster_of[dev] = c;
      assigned[dev] = true;
    }
  }

  for (NodeId dev = 0; dev < config_.device_count; ++dev) {
    if (!nodes_[dev].alive) continue;
    const unsigned count = packets_this_round();
    for (unsigned k = 0; k < count; ++k) {
      Packet p{next_packet_id_++, dev, now, config_.packet_bits};
      ledger_.sent += 1;
      double clock = now;

      const auto head =
          assigned[dev] ? partition_heads_[cluster_of[dev]] : std::nullopt;
      if (!head) {
        p.dropped_reason = DropReason::NoRoute;
      } else if (*head == dev) {
        if (transmit_hop(p, dev, cloud_id_, clock)) deliver(p, clock);
      } else {
        if (transmit_hop(p, dev, *head, clock) &&
            transmit_hop(p, *head, cloud_id_, clock)) {
          deliver(p, clock);
        }
      }
      round_packets_.push_back(std::move(p));
    }
  }
}

// ---------------------------------------------------------------------------
// ERGID-like

void Simulation::run_round_ergid_like() {
  const double now = round_ * config_.round_duration_s;
  const std::size_t n = nodes_.size();

  // Geometric neighbor graph; fogs are wired to the cloud.
  std::vector<std::vector<NodeId>> adj(n);
  auto in_range = [&](const NodeState& a, const NodeState& b) {
    return distance(a, b) <= std::min(a.comm_radius, b.comm_radius);
  };
  for (NodeId a = 0; a < n; ++a) {
    const NodeState& na = nodes_[a];
    if (na.is_device() && !na.alive) continue;
    for (NodeId b = a + 1; b < n; ++b) {
      const NodeState& nb = nodes_[b];
      if (nb.is_device() && !nb.alive) continue;
      const bool wired = (na.role != Role::Device && nb.role != Role::Device);
      if (wired || in_range(na, nb)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }

  // BFS hop counts toward the cloud; DIM delay estimate = hops * constant,
  // so ordering candidates by estimated delay is ordering by hop count.
  constexpr int kUnreachable = std::numeric_limits<int>::max();
  std::vector<int> hops(n, kUnreachable);
  std::vector<NodeId> frontier{cloud_id_};
  hops[cloud_id_] = 0;
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId v : adj[u]) {
        if (hops[v] == kUnreachable) {
          hops[v] = hops[u] + 1;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }

  for (NodeId dev = 0; dev < config_.device_count; ++dev) {
    if (!nodes_[dev].alive) continue;
    const unsigned count = packets_this_round();
    for (unsigned k = 0; k < count; ++k) {
      Packet p{next_packet_id_++, dev, now, config_.packet_bits};
      ledger_.sent += 1;
      double clock = now;

      NodeId current = dev;
      std::set<NodeId> visited{dev};
      int ttl = static_cast<int>(config_.device_count);
      bool dropped = false;

      while (nodes_[current].role == Role::Device) {
        if (ttl-- <= 0) {
          p.dropped_reason = DropReason::NoRoute;
          dropped = true;
          break;
        }
        // best-delay tier among admissible next hops
        int best_hops = kUnreachable;
        std::vector<NodeId> tier;
        for (NodeId nb : adj[current]) {
          if (visited.count(nb)) continue;
          if (nodes_[nb].is_device() && !nodes_[nb].alive) continue;
          if (hops[nb] == kUnreachable) continue;
          if (hops[nb] < best_hops) {
            best_hops = hops[nb];
            tier.clear();
          }
          if (hops[nb] == best_hops) tier.push_back(nb);
        }
        if (tier.empty()) {
          p.dropped_reason = DropReason::NoRoute;
          dropped = true;
          break;
        }

        NodeId next_hop;
        std::vector<NodeId> infra;
        for (NodeId t : tier) {
          if (!nodes_[t].is_device()) infra.push_back(t);
        }
        if (!infra.empty()) {
          next_hop = *std::min_element(infra.begin(), infra.end());
        } else {
          std::vector<double> energies;
          for (NodeId t : tier) energies.push_back(nodes_[t].residual_energy);
          next_hop = tier[repc_choose(energies, rng_)];  // REPC
        }

        if (!transmit_hop(p, current, next_hop, clock)) {
          dropped = true;
          break;
        }
        visited.insert(next_hop);
        current = next_hop;
      }

      if (!dropped) {
        if (nodes_[current].role == Role::Fog) {
          const double d = distance(nodes_[current], nodes_[cloud_id_]);
          clock += per_hop_latency(config_, p.bits, d);
          p.path.push_back({current, cloud_id_, d, clock});
        }
        deliver(p, clock);
      }
      round_packets_.push_back(std::move(p));
    }
  }
}

MetricsLedger run_scenario(const ScenarioConfig& config, Protocol protocol,
                           std::uint64_t seed) {
  Simulation sim(config, protocol, seed);
  sim.run_all();
  return sim.ledger();
}

}  // namespace hriot
