#include "wirephase/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "wirephase/errors.hpp"

namespace wirephase {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;  // (x^2/4)^k / (k!)^2
  double i0 = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  for (int k = 1; k < 100; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    tail += term * harmonic;
    if (term * harmonic < kEps * 1e-2 * std::abs(tail)) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0 + tail;
}

// Scaled K0: exp(x) K0(x), via the Steed/Temme continued fraction for K_nu, nu = 0.
double k0_scaled_cf(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 10000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 0.5 * kEps) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * x)) / s;
}

void require_hyp_domain(int n, double z) {
  if (n < 1) throw DomainError("hyp2f1_half requires n >= 1, got " + std::to_string(n));
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("hyp2f1_half requires finite z >= 0");
}

// log(1 + z^2) without overflow for large z.
double log1p_sq(double z) {
  if (z < 1e150) return std::log1p(z * z);
  return 2.0 * std::log(z) + std::log1p(1.0 / (z * z));
}

// Gauss series after the Pfaff transformation:
// 2F1(1/2, b; 3/2; -z^2) = (1+z^2)^(-1/2) 2F1(1/2, 3/2 - b; 3/2; w), w = z^2/(1+z^2) < 1/2 for z < 1.
// For even n, 3/2 - b = 1 - n/2 is a non-positive integer and the series terminates.
double hyp_series(int n, double z) {
  const double a = 1.0 - 0.5 * n;
  const double w = z * z / (1.0 + z * z);
  double coeff = 1.0;  // (a)_k / k! * w^k
  double sum = 1.0;
  for (int k = 0; k < 10000; ++k) {
    coeff *= (a + k) / (k + 1.0) * w;
    const double term = coeff / (2.0 * k + 3.0);
    sum += term;
    if (coeff == 0.0 || std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  return sum * std::exp(-0.5 * log1p_sq(z));
}

// int_0^z (1+v^2)^(-p) dv for p = (n+1)/2 by upward reduction from p = 1 or p = 3/2.
double hyp_recurrence(int n, double z) {
  const double target = 0.5 * (n + 1);
  double p;
  double integral;
  if (n % 2 == 1) {
    p = 1.0;
    integral = std::atan(z);
  } else {
    p = 1.5;
    integral = std::exp(std::log(z) - 0.5 * log1p_sq(z));
  }
  const double log_z = std::log(z);
  const double log_1pz2 = log1p_sq(z);
  while (p < target - 0.25) {
    const double boundary = std::exp(log_z - p * log_1pz2) / (2.0 * p);
    integral = boundary + (2.0 * p - 1.0) / (2.0 * p) * integral;
    p += 1.0;
  }
  return integral / z;
}

}  // namespace

K0Value bessel_k0_checked(double x) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError("bessel_k0 requires x > 0 (logarithmic singularity at 0), got " + std::to_string(x));
  }
  if (x <= 2.0) return {k0_series(x), false};
  if (std::isinf(x)) return {0.0, true};
  const double value = k0_scaled_cf(x) * std::exp(-x);
  if (value < std::numeric_limits<double>::min()) return {0.0, true};
  return {value, false};
}

double bessel_k0(double x) { return bessel_k0_checked(x).value; }

double bessel_k0_oracle(double x, const QuadratureSettings& settings) {
  if (std::isnan(x) || x <= 0.0) throw DomainError("bessel_k0_oracle requires x > 0");
  const double envelope = std::exp(-x);
  if (envelope == 0.0) return 0.0;
  // Integrate exp(-x (cosh w - 1)) and restore exp(-x) afterwards; cut where the
  // integrand falls below the double exponent range.
  const double w_max = std::acosh(1.0 + 750.0 / x);
  const auto f = [x](double w) { return std::exp(-x * (std::cosh(w) - 1.0)); };
  std::vector<double> breaks;
  for (double w = 1.0; w < w_max; w += 1.0) breaks.push_back(w);
  const double scaled = integrate(f, 0.0, w_max, breaks, settings).value;
  const double value = scaled * envelope;
  return value < std::numeric_limits<double>::min() ? 0.0 : value;
}

double hyp2f1_half(int n, double z) {
  require_hyp_domain(n, z);
  if (z == 0.0) return 1.0;
  switch (n) {
    case 1:
      return std::atan(z) / z;
    case 2:
      return std::exp(-0.5 * log1p_sq(z));
    case 3:
      return (std::exp(std::log(z) - log1p_sq(z)) + std::atan(z)) / (2.0 * z);
    default:
      return z < 1.0 ? hyp_series(n, z) : hyp_recurrence(n, z);
  }
}

double hyp2f1_half_oracle(int n, double z, const QuadratureSettings& settings) {
  require_hyp_domain(n, z);
  if (z == 0.0) throw DomainError("hyp2f1_half_oracle requires z > 0");
  const double power = -0.5 * (n + 1);
  const auto f = [power](double v) { return std::pow(1.0 + v * v, power); };
  std::vector<double> breaks;
  for (double p = 1.0; p < z; p *= 4.0) breaks.push_back(p);
  return integrate(f, 0.0, z, breaks, settings).value / z;
}

}  // namespace wirephase
