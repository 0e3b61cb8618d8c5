#pragma once

#include "qdyn/grid.hpp"

namespace qdyn {

/// Squeezed Gaussian wavepacket in closed form:
///
///   psi(x) = (Re a / (pi hbar))^{1/4} e^{i phase}
///            e^{i p0 (x-q0)/hbar} e^{-a (x-q0)^2 / (2 hbar)}
///
/// Unit norm holds analytically for any complex width a with Re a > 0.
/// a = 1, q0 = p0 = 0 is the standard coherent state at the origin.
struct GaussianState {
  double q0 = 0.0;
  double p0 = 0.0;
  cplx a = 1.0;
  double phase = 0.0;
  double hbar = 1.0;

  cplx value(double x) const;

  /// Spread of the position density: sqrt(hbar / (2 Re a)).
  double position_sigma() const;
  /// Spread of the momentum density: |a| sqrt(hbar / (2 Re a)).
  double momentum_sigma() const;
  /// position_sigma * momentum_sigma = (hbar/2) |a| / Re a.
  double uncertainty_product() const;
};

/// Evaluates g on the grid and renormalizes (the sampled Gaussian is not
/// exactly unit norm on a finite grid).
WaveFunction sample_on_grid(const GaussianState& g, const Grid& grid);

/// Coherent state (a = 1) centered at phase-space point (q0, p0).
/// Requires dx <= sqrt(hbar/2)/4 (GridTooCoarse) and
/// L/2 >= |q0| + 8 sqrt(hbar/2) (GridTooSmall).
WaveFunction coherent_state(const Grid& grid, double q0, double p0,
                            double hbar);

}  // namespace qdyn
