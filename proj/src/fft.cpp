#include "qdyn/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

namespace qdyn {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft1D::Fft1D(int n) : n_(n) {
  std::scoped_lock lock(planner_mutex());
  // FFTW_UNALIGNED lets the plans run on any caller buffer.
  fwd_ = fftw_plan_dft_1d(n, nullptr, nullptr, FFTW_FORWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
  bwd_ = fftw_plan_dft_1d(n, nullptr, nullptr, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft1D::~Fft1D() {
  std::scoped_lock lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void Fft1D::forward(cplx* data) const {
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), raw, raw);
}

void Fft1D::inverse(cplx* data) const {
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(bwd_), raw, raw);
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) data[i] *= scale;
}

double wavenumber(const Grid& grid, int j) {
  const int jt = (j < grid.n / 2) ? j : j - grid.n;
  return 2.0 * std::numbers::pi * jt / grid.length;
}

std::vector<double> momentum_density(const WaveFunction& psi) {
  std::vector<cplx> spec = psi.amps;
  Fft1D fft(psi.grid.n);
  fft.forward(spec.data());
  std::vector<double> dens(spec.size());
  double total = 0.0;
  for (size_t j = 0; j < spec.size(); ++j) {
    dens[j] = std::norm(spec[j]);
    total += dens[j];
  }
  for (double& d : dens) d /= total;
  return dens;
}

}  // namespace qdyn
