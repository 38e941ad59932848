#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wirephase/quadrature.hpp"

namespace wirephase {

struct SweepReport {
  std::string name;
  double max_deviation = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Oracle-vs-closed-form sweeps over specfun, potentials and interferometer, plus the
/// K0 asymptotic ratio checks. `tolerance_override` replaces every stated threshold.
std::vector<SweepReport> run_self_checks(const QuadratureSettings& settings = {},
                                         std::optional<double> tolerance_override = std::nullopt);

}  // namespace wirephase
