#include "qdyn/moments.hpp"

#include <cmath>

#include "qdyn/fft.hpp"

namespace qdyn {

Moments moments(const WaveFunction& psi) {
  require_normalized(psi);
  const Grid& g = psi.grid;

  double mq = 0.0, mq2 = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double rho = std::norm(psi.amps[i]) * g.dx();
    const double x = g.x(i);
    mq += x * rho;
    mq2 += x * x * rho;
  }

  const std::vector<double> dens = momentum_density(psi);
  double mk = 0.0, mk2 = 0.0;
  for (int j = 0; j < g.n; ++j) {
    const double k = wavenumber(g, j);
    mk += k * dens[j];
    mk2 += k * k * dens[j];
  }

  Moments m;
  m.mean_q = mq;
  m.mean_p = psi.hbar * mk;
  m.dq = std::sqrt(std::max(0.0, mq2 - mq * mq));
  m.dp = psi.hbar * std::sqrt(std::max(0.0, mk2 - mk * mk));
  return m;
}

double position_entropy(const WaveFunction& psi) {
  require_normalized(psi);
  double s = 0.0;
  for (const cplx& a : psi.amps) {
    const double rho = std::norm(a);
    if (rho > 0.0) s -= rho * std::log(rho);
  }
  return s * psi.grid.dx();
}

}  // namespace qdyn
