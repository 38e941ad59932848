#include "wirephase/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wirephase/interferometer.hpp"
#include "wirephase/potentials.hpp"
#include "wirephase/specfun.hpp"

namespace wirephase {

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i / (n - 1));
  return out;
}

}  // namespace

std::vector<SweepReport> run_self_checks(const QuadratureSettings& settings, std::optional<double> tolerance_override) {
  std::vector<SweepReport> reports;
  const auto add = [&](std::string name, double deviation, double threshold) {
    const double t = tolerance_override.value_or(threshold);
    reports.push_back({std::move(name), deviation, t, deviation <= t});
  };

  double worst = 0.0;
  for (double x : logspace(1e-3, 100.0, 100)) worst = std::max(worst, rel(bessel_k0(x), bessel_k0_oracle(x, settings)));
  add("k0 series/continued-fraction vs integral, x in [1e-3, 100]", worst, 1e-8);

  worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (double z : logspace(1e-3, 1e3, 100)) worst = std::max(worst, rel(hyp2f1_half(n, z), hyp2f1_half_oracle(n, z, settings)));
  }
  add("2F1 closed forms n=1..3 vs quadrature, z in [1e-3, 1e3]", worst, 1e-9);

  worst = 0.0;
  for (int n = 4; n <= 6; ++n) {
    for (double z : logspace(1e-3, 1e3, 100)) worst = std::max(worst, rel(hyp2f1_half(n, z), hyp2f1_half_oracle(n, z, settings)));
  }
  add("2F1 series/recurrence n=4..6 vs quadrature, z in [1e-3, 1e3]", worst, 1e-8);

  const double x_large = 50.0;
  add("k0 large-x ratio to sqrt(pi/2x) e^-x at x=50",
      std::abs(bessel_k0(x_large) / (std::sqrt(std::numbers::pi / (2.0 * x_large)) * std::exp(-x_large)) - 1.0), 1e-2);
  const double x_small = 1e-3;
  add("k0 small-x ratio to -ln(x/2) - gamma at x=1e-3",
      std::abs(bessel_k0(x_small) / (-std::log(0.5 * x_small) - kEulerGamma) - 1.0), 1e-3);

  const Scenario ref = Scenario::reference();
  const Yukawa yuk{1.0, 100e-6};
  const double infinite = yukawa_wire_potential(ref.wire.distance, yuk, ref.beam, ref.wire).energy;
  const double finite = yukawa_wire_potential_finite({0.0, -0.5 * ref.wire.length}, yuk, ref.beam, ref.wire, settings);
  add("yukawa finite wire (L=1 m, lambda=100 um) vs infinite wire at mid-wire", rel(finite, infinite), 1e-6);

  worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const ExtraDim model{n, 1.0, 100e-6};
    for (double s : logspace(1e-8, 1e-4, 20)) {
      worst = std::max(worst, rel(extradim_wire_potential(s, model, ref.beam, ref.wire).energy,
                                  extradim_wire_potential_oracle(s, model, ref.beam, ref.wire, settings)));
    }
  }
  add("extra-dimension wire potential n=1..3 vs quadrature", worst, 1e-8);

  Scenario newton = ref;
  newton.model = Newtonian{};
  newton.wire = WireParams::with_side_equal_distance(1.0, 2e4, 10e-6);
  const double exact = prefactor(newton) * newtonian_path_factor(newton.wire.distance, newton.geometry.beam_separation);
  add("newtonian numerical phase vs exact straight-path integral",
      rel(phase_difference_numerical(newton, settings).delta_phi, exact), 1e-6);

  Scenario y = ref;
  y.model = yuk;
  add("yukawa lower-arm numerical vs closed form",
      rel(phase_difference_numerical(y, settings).phi_lower, phase_difference_closed(y).phi_lower), 1e-8);
  return reports;
}

}  // namespace wirephase
