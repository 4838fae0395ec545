// Network entities and per-link physical quantities: positions, the
// first-order radio/energy model, log-distance RSSI and link expiration time.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace hriot {

using NodeId = std::uint32_t;

enum class Role { Device, Fog, Cloud };

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

struct NodeState {
  NodeId id = 0;
  Role role = Role::Device;
  Vec2 position;
  Vec2 velocity;
  double residual_energy = 0.0;   // joules; tracked for Device only
  double initial_energy = 0.0;    // joules
  double noise_figure = 0.0;      // dB, ambient noise at this node
  double comm_radius = 0.0;       // meters
  bool alive = true;

  bool is_device() const { return role == Role::Device; }
  // Fog and Cloud are mains-powered; they never run out of energy.
  bool energy_constrained() const { return role == Role::Device; }
};

// First-order radio model (LEACH-family convention). Coefficients are stored
// in SI units (J/bit, J/bit/m^2, J/bit/m^4).
struct RadioModel {
  double e_elec = 50e-9;          // electronics energy, J/bit
  double eps_fs = 10e-12;         // free-space amplifier, J/bit/m^2
  double eps_mp = 0.0013e-12;     // multipath amplifier, J/bit/m^4
  double tx_power_dbm = 0.0;
  double pl0_db = 40.0;           // path loss at the 1 m reference distance
  double path_loss_exponent = 2.0;
  double rx_sensitivity_dbm = -100.0;
  double bandwidth_bps = 250e3;

  // Crossover distance between the d^2 and d^4 amplifier regimes.
  // Always derived, never stored.
  double d0() const { return std::sqrt(eps_fs / eps_mp); }
};

struct LinkSample {
  NodeId src = 0;
  NodeId dst = 0;
  double distance = 0.0;   // meters
  double rssi = 0.0;       // dBm
  double let = 0.0;        // seconds, may be +infinity
  int hop_estimate = 1;
};

double distance(const NodeState& a, const NodeState& b);

// e_elec*bits + amplifier term; d^2 below the crossover distance, d^4 above.
double tx_energy(const RadioModel& model, double bits, double d);

double rx_energy(const RadioModel& model, double bits);

// Log-distance path loss with additive node noise. d is clamped to >= 1 m.
double rssi(const RadioModel& model, double d, double noise_db);

// Time until the inter-node distance first exceeds `range` under constant
// velocities. +infinity if the relative velocity is zero and the pair is in
// range; 0 if already out of range.
double link_expiration_time(const NodeState& a, const NodeState& b, double range);

}  // namespace hriot
