#include "hriot/node.hpp"

#include <algorithm>
#include <limits>

namespace hriot {

double distance(const NodeState& a, const NodeState& b) {
  return norm(a.position - b.position);
}

double tx_energy(const RadioModel& model, double bits, double d) {
  if (bits <= 0.0) return 0.0;
  const double d0 = model.d0();
  if (d < d0) {
    return model.e_elec * bits + model.eps_fs * bits * d * d;
  }
  return model.e_elec * bits + model.eps_mp * bits * d * d * d * d;
}

double rx_energy(const RadioModel& model, double bits) {
  return bits <= 0.0 ? 0.0 : model.e_elec * bits;
}

double rssi(const RadioModel& model, double d, double noise_db) {
  const double dc = std::max(d, 1.0);  // clamp below the 1 m reference
  return model.tx_power_dbm - model.pl0_db -
         10.0 * model.path_loss_exponent * std::log10(dc) - noise_db;
}

double link_expiration_time(const NodeState& a, const NodeState& b, double range) {
  const Vec2 dp = b.position - a.position;
  const Vec2 dv = b.velocity - a.velocity;
  const double dist2 = dot(dp, dp);
  if (dist2 > range * range) return 0.0;  // already out of range

  const double speed2 = dot(dv, dv);
  if (speed2 == 0.0) return std::numeric_limits<double>::infinity();

  // Smallest t >= 0 with |dp + t*dv| = range.
  const double b_term = dot(dp, dv);
  const double c_term = dist2 - range * range;  // <= 0 here
  const double disc = b_term * b_term - speed2 * c_term;
  return (-b_term + std::sqrt(disc)) / speed2;
}

}  // namespace hriot
