#pragma once

#include <functional>
#include <span>

namespace wirephase {

struct QuadratureSettings {
  double relative_tolerance = 1e-10;
  int max_subdivisions = 1000;

  /// Tolerance must lie in (0, 1e-3] and the subdivision budget be at least 10.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. Throws ConvergenceError when
/// the subdivision budget runs out before the relative tolerance is met.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSettings& settings = {});

/// As above, with the interval pre-split at interior `breakpoints` (sorted, within (a, b)).
QuadratureResult integrate(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                           const QuadratureSettings& settings = {});

}  // namespace wirephase
