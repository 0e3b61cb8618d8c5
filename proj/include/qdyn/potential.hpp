#pragma once

#include <array>
#include <string>

namespace qdyn {

enum class PotentialKind { Zero, Harmonic, DoubleWell, Polynomial };

/// Potential V(q) = c0 + c1 q + c2 q^2 + c3 q^3 + c4 q^4. The named kinds
/// pin their coefficients exactly: Harmonic is q^2, DoubleWell is
/// q^2 (q^2 - 1).
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Zero;
  std::array<double, 5> coeffs{};

  static PotentialSpec zero();
  static PotentialSpec harmonic();
  static PotentialSpec double_well();
  static PotentialSpec polynomial(const std::array<double, 5>& c);

  std::string name() const;
};

double potential_value(const PotentialSpec& spec, double q);

/// V'(q), exact from the coefficients.
double potential_derivative(const PotentialSpec& spec, double q);

/// V''(q), used for fixed-point classification.
double potential_second_derivative(const PotentialSpec& spec, double q);

}  // namespace qdyn
