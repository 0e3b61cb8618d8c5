#include "qdyn/split_step.hpp"

#include <cmath>

#include "qdyn/fft.hpp"

namespace qdyn {

namespace {

constexpr double kEdgeDensityLimit = 1e-8;

// Aliasing guard: spectral density in the outermost 1/32 of wavenumbers
// must stay below kEdgeDensityLimit of the peak.
void check_momentum_edge(const WaveFunction& psi) {
  const std::vector<double> dens = momentum_density(psi);
  const int n = psi.grid.n;
  const int band = std::max(1, n / 32);
  double peak = 0.0;
  for (double d : dens) peak = std::max(peak, d);
  double edge = 0.0;
  for (int j = n / 2 - band; j < n / 2 + band; ++j)
    edge = std::max(edge, dens[j]);
  if (edge > kEdgeDensityLimit * peak)
    throw UnstableParameters("momentum density reaches the grid edge");
}

class Stepper {
 public:
  Stepper(const Grid& grid, const PotentialSpec& spec, double hbar)
      : grid_(grid), hbar_(hbar), fft_(grid.n), kinetic_phase_(grid.n),
        half_pot_(grid.n) {
    v_.resize(grid.n);
    k2_.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
      v_[i] = potential_value(spec, grid.x(i));
      const double k = wavenumber(grid, i);
      k2_[i] = k * k;
    }
  }

  // One Strang step of signed size tau.
  void step(std::vector<cplx>& amps, double tau) {
    if (tau != cached_tau_) {
      for (int i = 0; i < grid_.n; ++i) {
        half_pot_[i] = std::exp(cplx(0.0, -0.5 * v_[i] * tau / hbar_));
        kinetic_phase_[i] = std::exp(cplx(0.0, -hbar_ * k2_[i] * tau));
      }
      cached_tau_ = tau;
    }
    for (int i = 0; i < grid_.n; ++i) amps[i] *= half_pot_[i];
    fft_.forward(amps.data());
    for (int i = 0; i < grid_.n; ++i) amps[i] *= kinetic_phase_[i];
    fft_.inverse(amps.data());
    for (int i = 0; i < grid_.n; ++i) amps[i] *= half_pot_[i];
  }

  // Advance by signed time t in steps of dt. Backward runs the mirrored
  // sequence (fractional step first) so it inverts the forward one exactly.
  void advance(std::vector<cplx>& amps, double t, double dt) {
    const double span = std::abs(t);
    const double sign = t < 0.0 ? -1.0 : 1.0;
    const long full = static_cast<long>(span / dt);
    const double frac = span - full * dt;
    if (sign > 0.0) {
      for (long s = 0; s < full; ++s) step(amps, dt);
      if (frac > 1e-15) step(amps, frac);
    } else {
      if (frac > 1e-15) step(amps, -frac);
      for (long s = 0; s < full; ++s) step(amps, -dt);
    }
  }

 private:
  Grid grid_;
  double hbar_;
  Fft1D fft_;
  std::vector<double> v_, k2_;
  std::vector<cplx> kinetic_phase_, half_pot_;
  double cached_tau_ = 0.0;
};

}  // namespace

WaveFunction split_step_evolve(const WaveFunction& psi0,
                               const PotentialSpec& spec, double t,
                               double dt) {
  if (!(dt > 0.0)) throw ValidationError("split_step_evolve needs dt > 0");
  require_normalized(psi0);
  check_momentum_edge(psi0);

  WaveFunction psi = psi0;
  if (t != 0.0) {
    Stepper stepper(psi.grid, spec, psi.hbar);
    stepper.advance(psi.amps, t, dt);
  }
  check_momentum_edge(psi);
  return psi;
}

std::vector<Snapshot> evolve_observed(const WaveFunction& psi0,
                                      const PotentialSpec& spec,
                                      const std::vector<double>& times,
                                      double dt) {
  if (!(dt > 0.0)) throw ValidationError("evolve_observed needs dt > 0");
  if (times.empty()) throw ValidationError("no observation times given");
  for (size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i] < times[i + 1]))
      throw ValidationError("observation times must be ascending");
  if (times.front() < 0.0)
    throw ValidationError("observation times must be nonnegative");
  require_normalized(psi0);
  check_momentum_edge(psi0);

  WaveFunction psi = psi0;
  Stepper stepper(psi.grid, spec, psi.hbar);
  std::vector<Snapshot> out;
  out.reserve(times.size());
  double now = 0.0;
  for (double target : times) {
    if (target > now) {
      stepper.advance(psi.amps, target - now, dt);
      now = target;
    }
    check_momentum_edge(psi);
    out.push_back({target, moments(psi), position_entropy(psi)});
  }
  return out;
}

double energy_expectation(const WaveFunction& psi, const PotentialSpec& spec) {
  require_normalized(psi);
  const std::vector<double> dens = momentum_density(psi);
  double kin = 0.0;
  for (int j = 0; j < psi.grid.n; ++j) {
    const double p = psi.hbar * wavenumber(psi.grid, j);
    kin += p * p * dens[j];
  }
  double pot = 0.0;
  for (int i = 0; i < psi.grid.n; ++i)
    pot += potential_value(spec, psi.grid.x(i)) * std::norm(psi.amps[i]) *
           psi.grid.dx();
  return kin + pot;
}

}  // namespace qdyn
