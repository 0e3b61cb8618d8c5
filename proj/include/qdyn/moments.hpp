#pragma once

#include "qdyn/grid.hpp"

namespace qdyn {

/// First and second moments of position and momentum.
struct Moments {
  double mean_q = 0.0;
  double mean_p = 0.0;
  double dq = 0.0;
  double dp = 0.0;

  double product() const { return dq * dp; }
};

/// <Q>, <P>, dQ, dP for a normalized state. Position moments come from the
/// grid density; momentum moments from the spectral density at p = hbar k,
/// k in [-pi/dx, pi/dx). Throws NotNormalized beyond 1e-6.
Moments moments(const WaveFunction& psi);

/// Differential position entropy -int rho ln rho dx, rho = |psi|^2.
/// Negative values are fine (rho carries units 1/length).
double position_entropy(const WaveFunction& psi);

}  // namespace qdyn
