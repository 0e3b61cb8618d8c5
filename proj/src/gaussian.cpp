#include "qdyn/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace qdyn {

cplx GaussianState::value(double x) const {
  const double dxq = x - q0;
  const double pref =
      std::pow(a.real() / (std::numbers::pi * hbar), 0.25);
  const cplx arg = cplx(0.0, phase) + cplx(0.0, p0 * dxq / hbar) -
                   a * (dxq * dxq) / (2.0 * hbar);
  return pref * std::exp(arg);
}

double GaussianState::position_sigma() const {
  return std::sqrt(hbar / (2.0 * a.real()));
}

double GaussianState::momentum_sigma() const {
  return std::abs(a) * std::sqrt(hbar / (2.0 * a.real()));
}

double GaussianState::uncertainty_product() const {
  return 0.5 * hbar * std::abs(a) / a.real();
}

WaveFunction sample_on_grid(const GaussianState& g, const Grid& grid) {
  WaveFunction psi;
  psi.grid = grid;
  psi.hbar = g.hbar;
  psi.amps.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) psi.amps[i] = g.value(grid.x(i));
  return normalized(std::move(psi));
}

WaveFunction coherent_state(const Grid& grid, double q0, double p0,
                            double hbar) {
  if (!(hbar > 0.0)) throw InvalidHbar("hbar must be positive");
  const double width = std::sqrt(hbar / 2.0);
  if (grid.dx() > width / 4.0)
    throw GridTooCoarse("need dx <= sqrt(hbar/2)/4 to resolve the packet");
  if (grid.length / 2.0 < std::abs(q0) + 8.0 * width)
    throw GridTooSmall("packet support exceeds the grid");
  return sample_on_grid(GaussianState{q0, p0, 1.0, 0.0, hbar}, grid);
}

}  // namespace qdyn
