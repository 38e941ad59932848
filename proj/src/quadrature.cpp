#include "wirephase/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "wirephase/errors.hpp"

namespace wirephase {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double abs_value;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);

  std::array<double, 7> lo{};
  std::array<double, 7> hi{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    lo[j] = f(center - dx);
    hi[j] = f(center + dx);
    const double pair = lo[j] + hi[j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(lo[j]) + std::abs(hi[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kKronrodWeights[j] * (std::abs(lo[j] - mean) + std::abs(hi[j] - mean));

  const double value = kronrod * half;
  abs_sum *= abs_half;
  asc *= abs_half;
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * abs_sum, err);
  return {a, b, value, err, abs_sum};
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-3)) {
    throw DomainError("quadrature relative_tolerance must lie in (0, 1e-3]");
  }
  if (max_subdivisions < 10) throw DomainError("quadrature max_subdivisions must be >= 10");
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSettings& settings) {
  return integrate(f, a, b, {}, settings);
}

QuadratureResult integrate(const Integrand& f, double a, double b, std::span<const double> breakpoints,
                           const QuadratureSettings& settings) {
  settings.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  if (a == b) return {};

  std::vector<double> edges{a};
  for (double p : breakpoints) {
    if (p > std::min(a, b) && p < std::max(a, b)) edges.push_back(p);
  }
  edges.push_back(b);
  if (a < b) {
    std::sort(edges.begin() + 1, edges.end() - 1);
  } else {
    std::sort(edges.begin() + 1, edges.end() - 1, std::greater<>());
  }

  std::priority_queue<Panel> panels;
  double total = 0.0;
  double total_err = 0.0;
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gauss_kronrod15(f, edges[i], edges[i + 1]);
    total += p.value;
    total_err += p.error;
    total_abs += p.abs_value;
    panels.push(p);
  }

  int subdivisions = 0;
  auto converged = [&] {
    return total_err <= settings.relative_tolerance * std::abs(total) || total_err <= 50.0 * kEps * total_abs;
  };

  while (!converged()) {
    if (subdivisions >= settings.max_subdivisions) {
      throw ConvergenceError("adaptive quadrature did not converge within " +
                             std::to_string(settings.max_subdivisions) + " subdivisions (error estimate " +
                             std::to_string(total_err) + ", value " + std::to_string(total) + ")");
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod15(f, worst.a, mid);
    const Panel right = gauss_kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum to shed drift from the incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {value, err, subdivisions};
}

}  // namespace wirephase
