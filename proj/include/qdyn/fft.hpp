#pragma once

#include <vector>

#include "qdyn/grid.hpp"

namespace qdyn {

/// In-place complex FFT workspace for one transform size. Plan creation is
/// serialized internally (the FFTW planner is not thread safe); executing
/// transforms from different workspaces in parallel is fine.
class Fft1D {
 public:
  explicit Fft1D(int n);
  ~Fft1D();
  Fft1D(const Fft1D&) = delete;
  Fft1D& operator=(const Fft1D&) = delete;

  /// Unnormalized forward DFT, in place.
  void forward(cplx* data) const;
  /// Inverse DFT scaled by 1/n, in place.
  void inverse(cplx* data) const;

  int size() const { return n_; }

 private:
  int n_;
  void* fwd_;  // fftw_plan
  void* bwd_;
};

/// Signed wavenumber for FFT bin j of a grid: k = 2 pi jt / L with
/// jt = j for j < n/2 and j - n otherwise, so k spans [-pi/dx, pi/dx).
double wavenumber(const Grid& grid, int j);

/// |FFT(psi)|^2 per bin, normalized to sum 1. Bin j corresponds to momentum
/// hbar * wavenumber(grid, j).
std::vector<double> momentum_density(const WaveFunction& psi);

}  // namespace qdyn
