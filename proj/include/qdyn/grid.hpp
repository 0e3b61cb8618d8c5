#pragma once

#include <complex>
#include <vector>

#include "qdyn/errors.hpp"

namespace qdyn {

using cplx = std::complex<double>;

/// Uniform position grid centered at the origin: x_i = -L/2 + i*dx.
/// The point count is a power of two so spectral transforms stay exact.
struct Grid {
  int n = 0;
  double length = 0.0;

  double dx() const { return length / n; }
  double x_min() const { return -0.5 * length; }
  double x(int i) const { return x_min() + i * dx(); }

  bool operator==(const Grid&) const = default;
};

/// n >= 8, n a power of two, length > 0; throws InvalidGrid otherwise.
Grid make_grid(int n, double length);

/// Complex amplitudes on a Grid, in units of position^{-1/2}, plus the
/// Planck constant the state lives at. Treated as an immutable value:
/// operations return new states.
struct WaveFunction {
  Grid grid;
  std::vector<cplx> amps;
  double hbar = 1.0;
};

/// sqrt(sum |amps_i|^2 dx)
double l2_norm(const WaveFunction& psi);

/// ||psi1 - psi2||_2; grids and hbar must match.
double l2_distance(const WaveFunction& psi1, const WaveFunction& psi2);

/// Rescales so the L2 norm is exactly 1. Throws ZeroMass below 1e-12.
WaveFunction normalized(WaveFunction psi);

/// Throws NotNormalized when | ||psi|| - 1 | > tol.
void require_normalized(const WaveFunction& psi, double tol = 1e-6);

/// <psi1|psi2> = sum conj(psi1) psi2 dx. Throws GridMismatch unless both
/// states share the grid and hbar.
cplx overlap(const WaveFunction& psi1, const WaveFunction& psi2);

}  // namespace qdyn
