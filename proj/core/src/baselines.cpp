#include "hriot/baselines.hpp"

#include <numeric>

namespace hriot {

double eecrp_ch_score(double residual_energy, double distance_to_centroid) {
  return residual_energy / (1.0 + distance_to_centroid);
}

std::size_t repc_choose(const std::vector<double>& energies, Rng& rng) {
  const double total = std::accumulate(energies.begin(), energies.end(), 0.0);
  if (total <= 0.0) {
    return energies.empty() ? 0 : static_cast<std::size_t>(rng.below(energies.size()));
  }
  const double target = rng.uniform() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    acc += energies[i];
    if (target < acc) return i;
  }
  return energies.size() - 1;
}

}  // namespace hriot
