#pragma once

#include <numbers>

#include "wirephase/quadrature.hpp"

namespace wirephase {

inline constexpr double kEulerGamma = std::numbers::egamma;

struct K0Value {
  double value = 0.0;
  /// Set when the true value lies below the normalized double range; value is then exactly 0.
  bool underflow = false;
};

/// Modified Bessel function K0. Power series for x <= 2, Steed's continued
/// fraction above. Relative accuracy better than 1e-12 on [1e-6, 700].
K0Value bessel_k0_checked(double x);
double bessel_k0(double x);

/// K0(x) = int_0^inf exp(-x cosh w) dw by adaptive quadrature. Independent of bessel_k0.
double bessel_k0_oracle(double x, const QuadratureSettings& settings = {});

/// 2F1(1/2, (n+1)/2; 3/2; -z^2), the mean of (1+v^2)^(-(n+1)/2) over [0, z].
double hyp2f1_half(int n, double z);

/// (1/z) int_0^z (1+v^2)^(-(n+1)/2) dv by adaptive quadrature.
double hyp2f1_half_oracle(int n, double z, const QuadratureSettings& settings = {});

}  // namespace wirephase
