#include "qdyn/potential.hpp"

namespace qdyn {

PotentialSpec PotentialSpec::zero() { return {PotentialKind::Zero, {}}; }

PotentialSpec PotentialSpec::harmonic() {
  return {PotentialKind::Harmonic, {0, 0, 1, 0, 0}};
}

PotentialSpec PotentialSpec::double_well() {
  return {PotentialKind::DoubleWell, {0, 0, -1, 0, 1}};
}

PotentialSpec PotentialSpec::polynomial(const std::array<double, 5>& c) {
  return {PotentialKind::Polynomial, c};
}

std::string PotentialSpec::name() const {
  switch (kind) {
    case PotentialKind::Zero: return "zero";
    case PotentialKind::Harmonic: return "harmonic";
    case PotentialKind::DoubleWell: return "doublewell";
    case PotentialKind::Polynomial: return "polynomial";
  }
  return "unknown";
}

double potential_value(const PotentialSpec& spec, double q) {
  const auto& c = spec.coeffs;
  return c[0] + q * (c[1] + q * (c[2] + q * (c[3] + q * c[4])));
}

double potential_derivative(const PotentialSpec& spec, double q) {
  const auto& c = spec.coeffs;
  return c[1] + q * (2 * c[2] + q * (3 * c[3] + q * 4 * c[4]));
}

double potential_second_derivative(const PotentialSpec& spec, double q) {
  const auto& c = spec.coeffs;
  return 2 * c[2] + q * (6 * c[3] + q * 12 * c[4]);
}

}  // namespace qdyn
