#include "wirephase/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <variant>
#include <vector>

#include "wirephase/errors.hpp"
#include "wirephase/potentials.hpp"
#include "wirephase/specfun.hpp"

namespace wirephase {

std::string_view to_string(PhaseMethod m) {
  return m == PhaseMethod::closed_form ? "closed_form" : "numerical";
}

std::string_view to_string(AsymptoticRegime r) {
  switch (r) {
    case AsymptoticRegime::deep_yukawa: return "deep_yukawa";
    case AsymptoticRegime::logarithmic: return "logarithmic";
    case AsymptoticRegime::crossover: return "crossover";
  }
  return "unknown";
}

double path_phase(const ArmPath& path, const Scenario& scenario, const QuadratureSettings& settings) {
  scenario.validate();
  const double L = scenario.geometry.grating_spacing;
  const auto f = [&](double z) { return wire_potential(path(z), scenario).energy; };

  // Short-range models vary on the scale lambda; help the rule near z = -L where the arms meet.
  std::vector<double> breaks;
  const double range = model_range(scenario.model);
  const double e = scenario.geometry.beam_separation;
  if (range > 0.0) {
    for (double k : {1.0, 10.0, 100.0}) {
      const double z = -L + L * k * range / e;
      if (z > -L && z < 0.0) breaks.push_back(z);
    }
  }
  const double integral = integrate(f, -L, 0.0, breaks, settings).value;
  return integral / (scenario.constants.hbar * scenario.beam.speed);
}

double newtonian_path_factor(double d, double e) {
  if (!(d > 0.0) || !(e > 0.0)) throw DomainError("newtonian_path_factor requires d, e > 0");
  return 2.0 * ((1.0 + d / e) * std::log1p(e / d) - 1.0);
}

PhaseResult phase_difference_closed(const Scenario& scenario) {
  scenario.validate();
  PhaseResult out;
  out.method = PhaseMethod::closed_form;
  out.warnings = scenario.assumption_warnings();
  const double pref = prefactor(scenario);
  const double d = scenario.wire.distance;

  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Newtonian>) {
          out.phi_upper = -pref * 2.0 * std::log1p(scenario.geometry.beam_separation / d);
        } else if constexpr (std::is_same_v<M, Yukawa>) {
          const K0Value k0 = bessel_k0_checked(d / m.range);
          if (k0.underflow) out.warnings.add(Warning::k0_underflow);
          out.phi_lower = pref * 2.0 * m.strength * k0.value;
        } else {
          const double ratio = m.range / d;
          out.phi_lower = pref * 2.0 * m.strength * std::pow(ratio, m.n + 1) * hyp2f1_half(m.n, ratio);
        }
      },
      scenario.model);
  out.delta_phi = out.phi_lower - out.phi_upper;
  return out;
}

PhaseResult phase_difference_numerical(const Scenario& scenario, const QuadratureSettings& settings) {
  scenario.validate();
  PhaseResult out;
  out.method = PhaseMethod::numerical;
  out.warnings = scenario.assumption_warnings();
  const auto& geom = scenario.geometry;
  out.phi_lower = -path_phase([](double) { return 0.0; }, scenario, settings);
  out.phi_upper = -path_phase([&geom](double z) { return geom.upper_arm_offset(z); }, scenario, settings);
  if (const auto* y = std::get_if<Yukawa>(&scenario.model)) {
    if (bessel_k0_checked(scenario.wire.distance / y->range).underflow) out.warnings.add(Warning::k0_underflow);
  }
  out.delta_phi = out.phi_lower - out.phi_upper;
  return out;
}

PhaseResult phase_difference(const Scenario& scenario, PhaseMethod method, const QuadratureSettings& settings) {
  return method == PhaseMethod::closed_form ? phase_difference_closed(scenario)
                                            : phase_difference_numerical(scenario, settings);
}

AsymptoticEstimate yukawa_phase_asymptotics(double d, double lambda) {
  if (!(d > 0.0) || !(lambda > 0.0)) throw DomainError("yukawa_phase_asymptotics requires d, lambda > 0");
  const double ratio = lambda / d;
  const double x = d / lambda;
  const double deep = 2.0 * std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
  const double logarithmic = 2.0 * (std::log(2.0 * ratio) - kEulerGamma);
  if (ratio <= 0.1) return {deep, AsymptoticRegime::deep_yukawa};
  if (ratio >= 10.0) return {logarithmic, AsymptoticRegime::logarithmic};
  return {ratio < 1.0 ? deep : logarithmic, AsymptoticRegime::crossover};
}

}  // namespace wirephase
