// Helpers shared by the trend-level baseline protocols (DIRECT, EECRP-like,
// ERGID-like). These are simplified comparison arms, not faithful
// reproductions of the published protocols.
#pragma once

#include <cstddef>
#include <vector>

#include "hriot/node.hpp"
#include "hriot/rng.hpp"

namespace hriot {

// EECRP-like CH score: residual_energy / (1 + distance to cluster centroid).
double eecrp_ch_score(double residual_energy, double distance_to_centroid);

// REPC: pick an index with probability proportional to residual energy.
// All-zero energies degrade to uniform choice.
std::size_t repc_choose(const std::vector<double>& energies, Rng& rng);

}  // namespace hriot
