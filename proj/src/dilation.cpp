#include "qdyn/dilation.hpp"

#include <array>
#include <cmath>

namespace qdyn {

double ehrenfest_time(double hbar, EhrenfestKind kind) {
  if (!(hbar > 0.0) || hbar > 1.0)
    throw InvalidHbar("ehrenfest_time needs 0 < hbar <= 1");
  const double full = std::log(1.0 / hbar);
  return kind == EhrenfestKind::Half ? 0.5 * full : full;
}

namespace {

// Centered npts-point Lagrange evaluation of uniformly sampled data at
// fractional index fi. Points outside the grid count as zero (decayed tail).
template <int npts>
cplx lagrange_at(const std::vector<cplx>& data, double fi) {
  const int n = static_cast<int>(data.size());
  const int base = static_cast<int>(std::floor(fi)) - npts / 2 + 1;
  std::array<double, npts> w;
  for (int a = 0; a < npts; ++a) {
    double prod = 1.0;
    for (int b = 0; b < npts; ++b) {
      if (a == b) continue;
      prod *= (fi - (base + b)) / static_cast<double>(a - b);
    }
    w[a] = prod;
  }
  cplx out = 0.0;
  for (int a = 0; a < npts; ++a) {
    const int idx = base + a;
    if (idx >= 0 && idx < n) out += w[a] * data[idx];
  }
  return out;
}

double position_spread(const WaveFunction& psi) {
  double mq = 0.0, mq2 = 0.0;
  for (int i = 0; i < psi.grid.n; ++i) {
    const double rho = std::norm(psi.amps[i]) * psi.grid.dx();
    const double x = psi.grid.x(i);
    mq += x * rho;
    mq2 += x * x * rho;
  }
  return std::sqrt(std::max(0.0, mq2 - mq * mq));
}

}  // namespace

WaveFunction dilation_flow(const WaveFunction& psi0, double t) {
  require_normalized(psi0);
  const Grid& g = psi0.grid;

  const double spread = position_spread(psi0);
  if (spread * std::exp(t) > g.length / 16.0)
    throw GridOverflow("dilated packet exceeds L/16");

  const double scale = std::exp(-t);
  const double amp = std::exp(-0.5 * t);
  WaveFunction out;
  out.grid = g;
  out.hbar = psi0.hbar;
  out.amps.resize(g.n);

  // 6-point stencil carries the result; the gap to a 4-point read estimates
  // the resampling error.
  double err2 = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double fi = (scale * g.x(i) - g.x_min()) / g.dx();
    const cplx v6 = lagrange_at<6>(psi0.amps, fi);
    const cplx v4 = lagrange_at<4>(psi0.amps, fi);
    out.amps[i] = amp * v6;
    err2 += std::norm(v6 - v4);
  }
  if (amp * std::sqrt(err2 * g.dx()) > 1e-6)
    throw InterpolationLoss("resampling error above 1e-6");

  return normalized(std::move(out));
}

GaussianState gaussian_dilation_evolve(const GaussianState& g, double t) {
  GaussianState out = g;
  out.q0 = g.q0 * std::exp(t);
  out.p0 = g.p0 * std::exp(-t);
  out.a = g.a * std::exp(-2.0 * t);
  return out;
}

double compare_grid_vs_analytic(const Grid& grid, double q0, double p0,
                                double hbar, double t) {
  const WaveFunction start = coherent_state(grid, q0, p0, hbar);
  const WaveFunction evolved = dilation_flow(start, t);

  const GaussianState track =
      gaussian_dilation_evolve(GaussianState{q0, p0, 1.0, 0.0, hbar}, t);
  double err2 = 0.0;
  for (int i = 0; i < grid.n; ++i)
    err2 += std::norm(evolved.amps[i] - track.value(grid.x(i)));
  return std::sqrt(err2 * grid.dx());
}

}  // namespace qdyn
