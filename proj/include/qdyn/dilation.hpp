#pragma once

#include "qdyn/gaussian.hpp"
#include "qdyn/grid.hpp"

namespace qdyn {

enum class EhrenfestKind { Half, Full };

/// Half -> (1/2) ln(1/hbar), Full -> ln(1/hbar). Requires 0 < hbar <= 1.
double ehrenfest_time(double hbar, EhrenfestKind kind);

/// Exact flow of the dilation generator -(i hbar/2)(x d/dx + d/dx x),
/// realized on the grid: psi_t(x) = e^{-t/2} psi_0(e^{-t} x).
///
/// The stretched state is read off by local polynomial interpolation and
/// renormalized. Throws GridOverflow once the stretched packet stops
/// fitting (dQ * e^t > L/16) and InterpolationLoss when the estimated
/// resampling error exceeds 1e-6.
WaveFunction dilation_flow(const WaveFunction& psi0, double t);

/// Closed-form track of the same flow on Gaussian states:
/// a -> a e^{-2t}, q0 -> e^t q0, p0 -> e^{-t} p0. Exact; the normalization
/// prefactor follows from a automatically.
GaussianState gaussian_dilation_evolve(const GaussianState& g, double t);

/// ||grid-evolved - analytic|| in L2 for a coherent state started at
/// (q0, p0): cross-check of the interpolating flow against the exact track.
double compare_grid_vs_analytic(const Grid& grid, double q0, double p0,
                                double hbar, double t);

}  // namespace qdyn
