#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qdyn/potential.hpp"

namespace qdyn {

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

double phase_distance(PhasePoint a, PhasePoint b);

enum class ModelKind { DilationSymbol, Potential };

/// Classical Hamiltonian system. DilationSymbol is h = q p with the exact
/// flow (q, p) -> (e^t q, e^-t p). Potential models are h = p^2 + V(q),
/// integrated by leapfrog with qdot = 2p, pdot = -V'(q).
struct ClassicalModel {
  ModelKind kind = ModelKind::DilationSymbol;
  PotentialSpec potential;

  static ClassicalModel dilation_symbol();
  static ClassicalModel from_potential(const PotentialSpec& spec);
};

double hamiltonian_value(const ClassicalModel& model, PhasePoint x);

struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> points;
};

/// Flow from x0 to time t (either sign), sampled every dt with the exact
/// endpoint appended. Aborts with FlowDiverged past |q| or |p| = 1e6.
Trajectory classical_flow(const ClassicalModel& model, PhasePoint x0,
                          double t, double dt);

/// Endpoint-only variant of classical_flow.
PhasePoint flow_point(const ClassicalModel& model, PhasePoint x0, double t,
                      double dt);

struct FixedPointInfo {
  PhasePoint point;
  bool hyperbolic = false;
  /// |Re lambda| of the Jacobian eigenvalues when hyperbolic, |Im lambda|
  /// when elliptic.
  double exponent = 0.0;
};

/// Equilibria (V'(q) = 0, p = 0) with their linear stability. Eigenvalues
/// satisfy lambda^2 = -2 V''(q); real parts below 1e-10 count as elliptic.
/// DilationSymbol reports its single hyperbolic point at the origin.
std::vector<FixedPointInfo> fixed_points(const ClassicalModel& model);

/// Smallest sampled t at which a perturbation of size eps grows to
/// separation I, or nullopt if t_max passes first. The perturbation points
/// along the local unstable eigenvector when x sits at a hyperbolic fixed
/// point, else along q.
std::optional<double> sensitivity_time(const ClassicalModel& model,
                                       PhasePoint x, double eps, double I,
                                       double dt, double t_max);

enum class Branch { Plus, Minus };

/// Polyline along one branch of an invariant manifold; base is the fixed
/// point the branch emanates from and is stored as the first vertex.
struct ManifoldCurve {
  Branch branch = Branch::Plus;
  std::vector<PhasePoint> points;
  PhasePoint base;
};

struct ManifoldPair {
  ManifoldCurve plus;
  ManifoldCurve minus;
};

/// Grows both unstable branches from seeds y +- eps * v_u by forward flow,
/// then resamples to segments of at most 1e-2 arclength. Growth stops at
/// `steps` integration steps or when a branch returns to the base
/// (homoclinic closure). The stable manifold is the same construction under
/// time reversal. Throws NotHyperbolic when the base has no expanding
/// direction.
ManifoldPair unstable_manifold(const ClassicalModel& model, PhasePoint y,
                               double eps, long steps, double dt);

/// Time average (1/2T) int_{-T}^{T} f(Phi^t x0) dt by trapezoid.
double time_average(const ClassicalModel& model,
                    const std::function<double(PhasePoint)>& f, PhasePoint x0,
                    double T, double dt);

/// Flows every curve point by s and returns the max distance back to the
/// original polyline, measuring set invariance at a fixed point. Flowed
/// points that project onto the polyline's terminal vertices are skipped:
/// they ran off the finite truncation rather than off the manifold.
double manifold_covariance_check(const ClassicalModel& model,
                                 const ManifoldCurve& curve, double s,
                                 double dt);

/// Min distance from z to the segments of a polyline.
double distance_to_polyline(PhasePoint z, std::span<const PhasePoint> poly);

}  // namespace qdyn
