#pragma once

#include <functional>
#include <string_view>

#include "wirephase/model.hpp"
#include "wirephase/quadrature.hpp"

namespace wirephase {

enum class PhaseMethod { closed_form, numerical };

std::string_view to_string(PhaseMethod m);

/// Arm phases are retardations, phi = -(1/hbar) int V dt, so the arm nearer an
/// attractive wire carries the larger positive phase and delta_phi = phi_lower - phi_upper.
struct PhaseResult {
  double delta_phi = 0.0;
  double phi_lower = 0.0;
  double phi_upper = 0.0;
  PhaseMethod method = PhaseMethod::closed_form;
  WarningSet warnings;
};

/// Transverse offset x(z) of a straight arm between the first two gratings.
using ArmPath = std::function<double(double)>;

/// (1/(hbar v)) int_{-L}^{0} V(x(z)) dz with the static wire potential of the scenario model.
double path_phase(const ArmPath& path, const Scenario& scenario, const QuadratureSettings& settings = {});

/// Closed forms that neglect the upper arm (e >> lambda). The Newtonian branch uses the
/// endpoint value 2 ln(1 + e/d) for the upper arm rather than its path average.
PhaseResult phase_difference_closed(const Scenario& scenario);

/// Both arms integrated numerically, upper arm included.
PhaseResult phase_difference_numerical(const Scenario& scenario, const QuadratureSettings& settings = {});

PhaseResult phase_difference(const Scenario& scenario, PhaseMethod method, const QuadratureSettings& settings = {});

/// Exact straight-path Newtonian geometry factor 2[(1 + d/e) ln(1 + e/d) - 1].
double newtonian_path_factor(double d, double e);

enum class AsymptoticRegime { deep_yukawa, logarithmic, crossover };

std::string_view to_string(AsymptoticRegime r);

struct AsymptoticEstimate {
  double geometry_factor = 0.0;  // estimate of 2 K0(d / lambda)
  AsymptoticRegime regime = AsymptoticRegime::crossover;
};

/// Leading behaviour of the Yukawa geometry factor: sqrt(2 pi lambda/d) e^(-d/lambda) for
/// lambda/d <= 0.1, 2(ln(2 lambda/d) - gamma) for lambda/d >= 10, labelled crossover between.
AsymptoticEstimate yukawa_phase_asymptotics(double d, double lambda);

}  // namespace wirephase
