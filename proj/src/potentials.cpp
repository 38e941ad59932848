#include "wirephase/potentials.hpp"

#include <cmath>
#include <algorithm>
#include <string>
#include <vector>
#include <variant>

#include "wirephase/errors.hpp"
#include "wirephase/specfun.hpp"

namespace wirephase {

namespace {

void require_separation(double s) {
  if (std::isnan(s) || s <= 0.0) {
    throw DomainError("atom-wire separation must be positive, got " + std::to_string(s));
  }
}

double coupling(double alpha, const BeamParams& beam, const WireParams& wire, const PhysicalConstants& c) {
  return alpha * c.G * beam.atom_mass * wire.linear_density();
}

}  // namespace

PotentialSample yukawa_wire_potential(double s, const Yukawa& model, const BeamParams& beam,
                                      const WireParams& wire, const PhysicalConstants& constants) {
  require_separation(s);
  validate(PotentialModel{model});
  PotentialSample out;
  if (model.strength == 0.0) return out;
  const K0Value k0 = bessel_k0_checked(s / model.range);
  if (k0.underflow) out.warnings.add(Warning::k0_underflow);
  out.energy = -2.0 * coupling(model.strength, beam, wire, constants) * k0.value;
  return out;
}

double yukawa_wire_potential_finite(const FieldPoint& p, const Yukawa& model, const BeamParams& beam,
                                    const WireParams& wire, const QuadratureSettings& settings,
                                    const PhysicalConstants& constants) {
  const double s = wire.distance + p.x;
  require_separation(s);
  validate(PotentialModel{model});
  if (model.strength == 0.0) return 0.0;
  const double lambda = model.range;
  const auto f = [s, lambda](double u) {
    const double r = std::hypot(s, u);
    return std::exp(-r / lambda) / r;
  };
  const double lo = -wire.length - p.z;
  const double hi = -p.z;
  // The integrand lives within a few hundred (s + lambda) of u = 0. Panels wider than
  // that see only underflowed nodes, so lay breakpoints out geometrically to 700 (s + lambda).
  std::vector<double> breaks{0.0};
  for (double scale = s + lambda, end = 700.0 * (s + lambda); scale < end; scale *= 3.0) {
    breaks.push_back(scale);
    breaks.push_back(-scale);
  }
  std::sort(breaks.begin(), breaks.end());
  const double integral = integrate(f, lo, hi, breaks, settings).value;
  return -coupling(model.strength, beam, wire, constants) * integral;
}

PotentialSample extradim_wire_potential(double s, const ExtraDim& model, const BeamParams& beam,
                                        const WireParams& wire, const PhysicalConstants& constants) {
  require_separation(s);
  validate(PotentialModel{model});
  PotentialSample out;
  if (s > model.range) out.warnings.add(Warning::extradim_beyond_range);
  if (model.strength == 0.0) return out;
  const double ratio = model.range / s;
  out.energy = -2.0 * coupling(model.strength, beam, wire, constants) * std::pow(ratio, model.n + 1) *
               hyp2f1_half(model.n, ratio);
  return out;
}

double extradim_wire_potential_oracle(double s, const ExtraDim& model, const BeamParams& beam,
                                      const WireParams& wire, const QuadratureSettings& settings,
                                      const PhysicalConstants& constants) {
  require_separation(s);
  validate(PotentialModel{model});
  if (model.strength == 0.0) return 0.0;
  const double lambda = model.range;
  const int n = model.n;
  const auto f = [s, lambda, n](double u) {
    const double r = std::hypot(s, u);
    return std::pow(lambda / r, n) / r;
  };
  double breaks[] = {-s, 0.0, s};
  const double integral = integrate(f, -lambda, lambda, breaks, settings).value;
  return -coupling(model.strength, beam, wire, constants) * integral;
}

double newtonian_wire_potential(double x, double d, const BeamParams& beam, const WireParams& wire,
                                const PhysicalConstants& constants) {
  if (!(d > 0.0)) throw DomainError("wire distance d must be positive");
  require_separation(d + x);
  return 2.0 * coupling(1.0, beam, wire, constants) * std::log1p(x / d);
}

PotentialSample wire_potential(double x, const Scenario& scenario) {
  const double s = scenario.wire.distance + x;
  return std::visit(
      [&](const auto& m) -> PotentialSample {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Newtonian>) {
          return {newtonian_wire_potential(x, scenario.wire.distance, scenario.beam, scenario.wire,
                                           scenario.constants),
                  {}};
        } else if constexpr (std::is_same_v<M, Yukawa>) {
          return yukawa_wire_potential(s, m, scenario.beam, scenario.wire, scenario.constants);
        } else {
          return extradim_wire_potential(s, m, scenario.beam, scenario.wire, scenario.constants);
        }
      },
      scenario.model);
}

}  // namespace wirephase
