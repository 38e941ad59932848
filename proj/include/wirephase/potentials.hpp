#pragma once

#include "wirephase/model.hpp"
#include "wirephase/quadrature.hpp"

namespace wirephase {

/// Position of the atom: transverse offset x from the lower arm, longitudinal z in [-L, 0].
struct FieldPoint {
  double x = 0.0;
  double z = 0.0;
};

/// Potential energy of the probe atom (J) plus validity flags.
struct PotentialSample {
  double energy = 0.0;
  WarningSet warnings;
};

// All potentials below take the atom-wire separation s = d + x > 0.

/// Infinite wire, Yukawa term only: -2 alpha G M mu K0(s / lambda).
PotentialSample yukawa_wire_potential(double s, const Yukawa& model, const BeamParams& beam,
                                      const WireParams& wire, const PhysicalConstants& constants = {});

/// Finite wire spanning u in [-L_wire - z, -z] relative to the atom, integrated numerically.
double yukawa_wire_potential_finite(const FieldPoint& p, const Yukawa& model, const BeamParams& beam,
                                    const WireParams& wire, const QuadratureSettings& settings = {},
                                    const PhysicalConstants& constants = {});

/// Extra-dimension law integrated over the wire segment |u| <= lambda_n:
/// -2 alpha G M mu (lambda/s)^(n+1) 2F1(1/2, (n+1)/2; 3/2; -(lambda/s)^2).
/// Flags extradim_beyond_range when s > lambda_n.
PotentialSample extradim_wire_potential(double s, const ExtraDim& model, const BeamParams& beam,
                                        const WireParams& wire, const PhysicalConstants& constants = {});

/// Direct quadrature of the same truncated wire integral.
double extradim_wire_potential_oracle(double s, const ExtraDim& model, const BeamParams& beam,
                                      const WireParams& wire, const QuadratureSettings& settings = {},
                                      const PhysicalConstants& constants = {});

/// Infinite-wire Newtonian potential 2 G M mu ln(1 + x/d), zero on the lower arm.
double newtonian_wire_potential(double x, double d, const BeamParams& beam, const WireParams& wire,
                                const PhysicalConstants& constants = {});

/// Dispatch on the model at transverse offset x from the lower arm (separation d + x).
PotentialSample wire_potential(double x, const Scenario& scenario);

}  // namespace wirephase
