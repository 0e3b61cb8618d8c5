#include "qdyn/grid.hpp"

#include <cmath>
#include <string>

namespace qdyn {

Grid make_grid(int n, double length) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw InvalidGrid("grid size must be a power of two >= 8, got " +
                      std::to_string(n));
  if (!(length > 0.0))
    throw InvalidGrid("grid length must be positive, got " +
                      std::to_string(length));
  return Grid{n, length};
}

double l2_norm(const WaveFunction& psi) {
  double s = 0.0;
  for (const cplx& a : psi.amps) s += std::norm(a);
  return std::sqrt(s * psi.grid.dx());
}

double l2_distance(const WaveFunction& psi1, const WaveFunction& psi2) {
  if (psi1.grid != psi2.grid || psi1.hbar != psi2.hbar)
    throw GridMismatch("l2_distance: states live on different grids");
  double s = 0.0;
  for (size_t i = 0; i < psi1.amps.size(); ++i)
    s += std::norm(psi1.amps[i] - psi2.amps[i]);
  return std::sqrt(s * psi1.grid.dx());
}

WaveFunction normalized(WaveFunction psi) {
  const double nrm = l2_norm(psi);
  if (nrm < 1e-12) throw ZeroMass("state has no mass to normalize");
  for (cplx& a : psi.amps) a /= nrm;
  return psi;
}

void require_normalized(const WaveFunction& psi, double tol) {
  const double nrm = l2_norm(psi);
  if (std::abs(nrm - 1.0) > tol)
    throw NotNormalized("state norm is " + std::to_string(nrm));
}

cplx overlap(const WaveFunction& psi1, const WaveFunction& psi2) {
  if (psi1.grid != psi2.grid || psi1.hbar != psi2.hbar)
    throw GridMismatch("overlap: states live on different grids");
  cplx s = 0.0;
  for (size_t i = 0; i < psi1.amps.size(); ++i)
    s += std::conj(psi1.amps[i]) * psi2.amps[i];
  return s * psi1.grid.dx();
}

}  // namespace qdyn
