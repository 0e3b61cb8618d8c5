#pragma once

#include <vector>

#include "qdyn/grid.hpp"
#include "qdyn/moments.hpp"
#include "qdyn/potential.hpp"

namespace qdyn {

/// Unitary evolution under H = p^2 + V(q). Note the kinetic term is p^2,
/// not p^2/2, so the matching classical equations read qdot = 2p.
///
/// Strang splitting: half potential kick, full spectral kinetic step, half
/// potential kick. Full steps of dt are followed by one fractional step so
/// the total time is exactly t; negative t runs the exact mirror sequence,
/// making evolve(t) then evolve(-t) an identity up to roundoff.
///
/// Throws UnstableParameters when the momentum density touches the grid
/// edge (aliasing), checked on entry and exit.
WaveFunction split_step_evolve(const WaveFunction& psi0,
                               const PotentialSpec& spec, double t,
                               double dt);

struct Snapshot {
  double t = 0.0;
  Moments m;
  double entropy = 0.0;
};

/// Single evolution pass with observations at the requested times
/// (ascending, first may be 0). dt subdivides each interval exactly.
std::vector<Snapshot> evolve_observed(const WaveFunction& psi0,
                                      const PotentialSpec& spec,
                                      const std::vector<double>& times,
                                      double dt);

/// <H> = <p^2> + <V(q)>, kinetic part from the spectral density.
double energy_expectation(const WaveFunction& psi, const PotentialSpec& spec);

}  // namespace qdyn
