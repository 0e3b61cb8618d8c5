#include "qdyn/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

constexpr double kDivergenceBound = 1e6;
constexpr double kEllipticThreshold = 1e-10;
constexpr double kMaxSegment = 1e-2;

void check_bounds(PhasePoint x) {
  if (std::abs(x.q) > kDivergenceBound || std::abs(x.p) > kDivergenceBound)
    throw FlowDiverged("trajectory left |q|,|p| <= 1e6");
}

// Kick-drift-kick leapfrog for h = p^2 + V(q); exactly reversible in dt.
PhasePoint leap_step(const PotentialSpec& spec, PhasePoint x, double dt) {
  x.p -= 0.5 * dt * potential_derivative(spec, x.q);
  x.q += dt * 2.0 * x.p;
  x.p -= 0.5 * dt * potential_derivative(spec, x.q);
  return x;
}

PhasePoint dilation_map(PhasePoint x, double t) {
  return {x.q * std::exp(t), x.p * std::exp(-t)};
}

// Real roots of a x^3 + b x^2 + c x + d, Newton-polished.
std::vector<double> cubic_real_roots(double a, double b, double c, double d) {
  std::vector<double> roots;
  const double scale =
      std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (scale == 0.0) return roots;
  const double tiny = 1e-14 * scale;

  if (std::abs(a) <= tiny) {
    if (std::abs(b) <= tiny) {
      if (std::abs(c) > tiny) roots.push_back(-d / c);
      return roots;
    }
    const double disc = c * c - 4.0 * b * d;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      roots.push_back((-c + sq) / (2.0 * b));
      roots.push_back((-c - sq) / (2.0 * b));
    }
    return roots;
  }

  // Depressed cubic y^3 + p y + q with x = y - B/3.
  const double B = b / a, C = c / a, D = d / a;
  const double p = C - B * B / 3.0;
  const double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + D;
  const double shift = -B / 3.0;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  if (disc > 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double theta =
        std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0)) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(
          m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift);
  } else {
    const double u = -q / 2.0;
    const double w = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
    roots.push_back(std::cbrt(u + w) + std::cbrt(u - w) + shift);
  }

  auto poly = [&](double x) { return ((a * x + b) * x + c) * x + d; };
  auto dpoly = [&](double x) { return (3.0 * a * x + 2.0 * b) * x + c; };
  for (double& r : roots)
    for (int it = 0; it < 3; ++it) {
      const double dp = dpoly(r);
      if (std::abs(dp) > tiny) r -= poly(r) / dp;
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double u, double v) {
                            return std::abs(u - v) < 1e-9;
                          }),
              roots.end());
  return roots;
}

// Unit vector along the expanding eigdirection at a hyperbolic fixed point.
PhasePoint unstable_direction(const ClassicalModel& model, PhasePoint y) {
  if (model.kind == ModelKind::DilationSymbol) return {1.0, 0.0};
  // Jacobian of (2p, -V'(q)) is [[0, 2], [-V'', 0]]; for -V'' > 0 the
  // eigenvalue sqrt(-2 V'') has eigenvector (1, lambda/2).
  const double vpp = potential_second_derivative(model.potential, y.q);
  const double lam2 = -2.0 * vpp;
  if (lam2 <= kEllipticThreshold * kEllipticThreshold)
    throw NotHyperbolic("fixed point has no expanding direction");
  const double lam = std::sqrt(lam2);
  const double nrm = std::hypot(1.0, lam / 2.0);
  return {1.0 / nrm, lam / (2.0 * nrm)};
}

struct NearestOnPolyline {
  double distance = 0.0;
  bool at_first_vertex = false;
  bool at_last_vertex = false;
};

NearestOnPolyline nearest_on_polyline(PhasePoint z,
                                      std::span<const PhasePoint> poly) {
  NearestOnPolyline best;
  best.distance = std::numeric_limits<double>::infinity();
  if (poly.size() == 1) {
    best.distance = phase_distance(z, poly[0]);
    best.at_first_vertex = best.at_last_vertex = true;
    return best;
  }
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    const double dq = poly[i + 1].q - poly[i].q;
    const double dp = poly[i + 1].p - poly[i].p;
    const double len2 = dq * dq + dp * dp;
    double u = 0.0;
    if (len2 > 0.0)
      u = std::clamp(
          ((z.q - poly[i].q) * dq + (z.p - poly[i].p) * dp) / len2, 0.0, 1.0);
    const PhasePoint c{poly[i].q + u * dq, poly[i].p + u * dp};
    const double d = phase_distance(z, c);
    if (d < best.distance) {
      best.distance = d;
      best.at_first_vertex = (i == 0 && u == 0.0);
      best.at_last_vertex = (i + 2 == poly.size() && u == 1.0);
    }
  }
  return best;
}

}  // namespace

double phase_distance(PhasePoint a, PhasePoint b) {
  return std::hypot(a.q - b.q, a.p - b.p);
}

ClassicalModel ClassicalModel::dilation_symbol() {
  return {ModelKind::DilationSymbol, PotentialSpec::zero()};
}

ClassicalModel ClassicalModel::from_potential(const PotentialSpec& spec) {
  return {ModelKind::Potential, spec};
}

double hamiltonian_value(const ClassicalModel& model, PhasePoint x) {
  if (model.kind == ModelKind::DilationSymbol) return x.q * x.p;
  return x.p * x.p + potential_value(model.potential, x.q);
}

Trajectory classical_flow(const ClassicalModel& model, PhasePoint x0,
                          double t, double dt) {
  if (!(dt > 0.0)) throw ValidationError("classical_flow needs dt > 0");
  Trajectory traj;
  traj.times.push_back(0.0);
  traj.points.push_back(x0);
  if (t == 0.0) return traj;

  const double sign = t < 0.0 ? -1.0 : 1.0;
  const double span = std::abs(t);
  const long full = static_cast<long>(span / dt);

  if (model.kind == ModelKind::DilationSymbol) {
    for (long s = 1; s <= full; ++s) {
      const double ts = sign * s * dt;
      traj.times.push_back(ts);
      traj.points.push_back(dilation_map(x0, ts));
      check_bounds(traj.points.back());
    }
  } else {
    PhasePoint x = x0;
    for (long s = 1; s <= full; ++s) {
      x = leap_step(model.potential, x, sign * dt);
      check_bounds(x);
      traj.times.push_back(sign * s * dt);
      traj.points.push_back(x);
    }
  }
  const double rem = span - full * dt;
  if (rem > 1e-15) {
    traj.times.push_back(t);
    if (model.kind == ModelKind::DilationSymbol) {
      traj.points.push_back(dilation_map(x0, t));
    } else {
      traj.points.push_back(
          leap_step(model.potential, traj.points.back(), sign * rem));
    }
    check_bounds(traj.points.back());
  }
  return traj;
}

PhasePoint flow_point(const ClassicalModel& model, PhasePoint x0, double t,
                      double dt) {
  if (model.kind == ModelKind::DilationSymbol) {
    const PhasePoint out = dilation_map(x0, t);
    check_bounds(out);
    return out;
  }
  return classical_flow(model, x0, t, dt).points.back();
}

std::vector<FixedPointInfo> fixed_points(const ClassicalModel& model) {
  if (model.kind == ModelKind::DilationSymbol)
    return {{{0.0, 0.0}, true, 1.0}};

  const auto& c = model.potential.coeffs;
  // V'(q) = c1 + 2 c2 q + 3 c3 q^2 + 4 c4 q^3
  if (c[1] == 0.0 && c[2] == 0.0 && c[3] == 0.0 && c[4] == 0.0)
    throw UnsupportedModel("potential has no isolated critical points");
  const std::vector<double> qs =
      cubic_real_roots(4.0 * c[4], 3.0 * c[3], 2.0 * c[2], c[1]);

  std::vector<FixedPointInfo> out;
  for (double q : qs) {
    const double lam2 =
        -2.0 * potential_second_derivative(model.potential, q);
    FixedPointInfo info;
    info.point = {q, 0.0};
    if (lam2 > kEllipticThreshold * kEllipticThreshold) {
      info.hyperbolic = true;
      info.exponent = std::sqrt(lam2);
    } else {
      info.hyperbolic = false;
      info.exponent = std::sqrt(std::max(0.0, -lam2));
    }
    out.push_back(info);
  }
  return out;
}

std::optional<double> sensitivity_time(const ClassicalModel& model,
                                       PhasePoint x, double eps, double I,
                                       double dt, double t_max) {
  if (!(eps > 0.0) || !(I > eps))
    throw ValidationError("sensitivity_time needs 0 < eps < I");
  if (!(dt > 0.0) || !(t_max > 0.0))
    throw ValidationError("sensitivity_time needs dt, t_max > 0");

  PhasePoint dir{1.0, 0.0};
  for (const FixedPointInfo& fp : fixed_points(model)) {
    if (fp.hyperbolic && phase_distance(x, fp.point) < 1e-12) {
      dir = unstable_direction(model, fp.point);
      break;
    }
  }

  PhasePoint a = x;
  PhasePoint b{x.q + eps * dir.q, x.p + eps * dir.p};
  double t = 0.0;
  while (t <= t_max + 1e-15) {
    if (phase_distance(a, b) >= I) return t;
    if (model.kind == ModelKind::DilationSymbol) {
      a = dilation_map(x, t + dt);
      b = dilation_map({x.q + eps * dir.q, x.p + eps * dir.p}, t + dt);
    } else {
      a = leap_step(model.potential, a, dt);
      b = leap_step(model.potential, b, dt);
    }
    check_bounds(a);
    check_bounds(b);
    t += dt;
  }
  return std::nullopt;
}

namespace {

std::vector<PhasePoint> resample_by_arclength(
    const std::vector<PhasePoint>& pts, double max_segment) {
  if (pts.size() < 3) return pts;
  std::vector<double> cum(pts.size(), 0.0);
  for (size_t i = 1; i < pts.size(); ++i)
    cum[i] = cum[i - 1] + phase_distance(pts[i - 1], pts[i]);
  const double total = cum.back();
  if (total == 0.0) return {pts.front(), pts.back()};
  const long nseg = std::max(1L, static_cast<long>(std::ceil(total / max_segment)));
  const double h = total / nseg;

  std::vector<PhasePoint> out;
  out.reserve(nseg + 1);
  out.push_back(pts.front());
  size_t j = 1;
  for (long s = 1; s < nseg; ++s) {
    const double target = s * h;
    while (j < pts.size() && cum[j] < target) ++j;
    const double seg = cum[j] - cum[j - 1];
    const double u = seg > 0.0 ? (target - cum[j - 1]) / seg : 0.0;
    out.push_back({pts[j - 1].q + u * (pts[j].q - pts[j - 1].q),
                   pts[j - 1].p + u * (pts[j].p - pts[j - 1].p)});
  }
  out.push_back(pts.back());
  return out;
}

ManifoldCurve grow_branch(const ClassicalModel& model, PhasePoint y,
                          PhasePoint seed, Branch branch, long steps,
                          double dt, double eps) {
  std::vector<PhasePoint> pts{y, seed};
  PhasePoint x = seed;
  double arclen = phase_distance(y, seed);
  const double return_radius = std::max(eps, 1e-6);
  for (long s = 0; s < steps; ++s) {
    const PhasePoint next =
        model.kind == ModelKind::DilationSymbol
            ? dilation_map(x, dt)
            : leap_step(model.potential, x, dt);
    check_bounds(next);
    arclen += phase_distance(x, next);
    pts.push_back(next);
    x = next;
    // homoclinic closure: left the base and came back
    if (arclen > 100.0 * return_radius && phase_distance(x, y) < return_radius)
      break;
  }
  ManifoldCurve curve;
  curve.branch = branch;
  curve.base = y;
  curve.points = resample_by_arclength(pts, kMaxSegment);
  return curve;
}

}  // namespace

ManifoldPair unstable_manifold(const ClassicalModel& model, PhasePoint y,
                               double eps, long steps, double dt) {
  if (!(eps > 0.0) || !(dt > 0.0) || steps < 1)
    throw ValidationError("unstable_manifold needs eps, dt > 0 and steps >= 1");
  if (model.kind == ModelKind::Potential) {
    if (std::abs(potential_derivative(model.potential, y.q)) > 1e-9 ||
        std::abs(y.p) > 1e-9)
      throw ValidationError("manifold base is not a fixed point");
  }
  const PhasePoint v = unstable_direction(model, y);

  const PhasePoint seed_plus{y.q + eps * v.q, y.p + eps * v.p};
  const PhasePoint seed_minus{y.q - eps * v.q, y.p - eps * v.p};
  return {grow_branch(model, y, seed_plus, Branch::Plus, steps, dt, eps),
          grow_branch(model, y, seed_minus, Branch::Minus, steps, dt, eps)};
}

double time_average(const ClassicalModel& model,
                    const std::function<double(PhasePoint)>& f, PhasePoint x0,
                    double T, double dt) {
  if (!(T > 0.0)) throw ValidationError("time_average needs T > 0");
  double integral = 0.0;
  for (const double sign : {-1.0, 1.0}) {
    const Trajectory traj = classical_flow(model, x0, sign * T, dt);
    for (size_t i = 0; i + 1 < traj.times.size(); ++i) {
      const double w = std::abs(traj.times[i + 1] - traj.times[i]);
      integral += 0.5 * w * (f(traj.points[i]) + f(traj.points[i + 1]));
    }
  }
  return integral / (2.0 * T);
}

double manifold_covariance_check(const ClassicalModel& model,
                                 const ManifoldCurve& curve, double s,
                                 double dt) {
  if (curve.points.empty()) throw EmptyCurve("manifold curve has no points");
  double worst = 0.0;
  for (const PhasePoint& z : curve.points) {
    const PhasePoint moved = flow_point(model, z, s, dt);
    const NearestOnPolyline near = nearest_on_polyline(moved, curve.points);
    if (near.at_first_vertex || near.at_last_vertex) continue;
    worst = std::max(worst, near.distance);
  }
  return worst;
}

double distance_to_polyline(PhasePoint z, std::span<const PhasePoint> poly) {
  if (poly.empty()) throw EmptyCurve("polyline has no points");
  return nearest_on_polyline(z, poly).distance;
}

}  // namespace qdyn
