#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wirephase/interferometer.hpp"
#include "wirephase/model.hpp"
#include "wirephase/quadrature.hpp"

namespace wirephase {

/// Log-spaced ranges lambda in [min, max]; min == max yields repeated points.
struct LambdaGrid {
  double min = 1e-5;
  double max = 1e-3;
  int points = 61;

  void validate() const;
  std::vector<double> values() const;
};

/// Which short-range law a scan or optimization inverts.
struct ModelFamily {
  enum class Kind { yukawa, extradim };
  Kind kind = Kind::yukawa;
  int n = 0;

  static ModelFamily yukawa() { return {Kind::yukawa, 0}; }
  static ModelFamily extradim(int n) { return {Kind::extradim, n}; }

  PotentialModel at(double lambda, double alpha = 1.0) const;
  std::string name() const;
  void validate() const;

  friend bool operator==(const ModelFamily&, const ModelFamily&) = default;
};

enum class MassCoupling { fixed_mass, mass_tracks_d };

std::string_view to_string(MassCoupling c);

struct ScanSpec {
  LambdaGrid grid;
  ModelFamily family;
  double d = 10e-6;
  MassCoupling coupling = MassCoupling::mass_tracks_d;
  PhaseMethod method = PhaseMethod::closed_form;
  int threads = 0;  // 0: hardware concurrency

  void validate() const;
};

enum class Regime { native, yukawa_extrapolated };

std::string_view to_string(Regime r);

struct ExclusionPoint {
  double lambda = 0.0;
  double alpha_limit = 0.0;
  Regime regime = Regime::native;

  friend bool operator==(const ExclusionPoint&, const ExclusionPoint&) = default;
};

struct ScanFailure {
  double lambda = 0.0;
  std::string message;
};

struct ExclusionCurve {
  std::vector<ExclusionPoint> points;
  std::vector<ScanFailure> failures;
};

/// Scenario at wire distance d; with mass_tracks_d the cross-section side follows d.
Scenario scenario_at_distance(const Scenario& base, double d, MassCoupling coupling);

/// delta_phi_min / delta_phi(alpha = 1). Throws DegenerateSignalError if the unit-strength
/// phase vanishes and DomainError for the Newtonian model (no strength parameter).
double alpha_limit(const Scenario& scenario, PhaseMethod method = PhaseMethod::closed_form,
                   const QuadratureSettings& settings = {});

/// Exclusion curve over the grid. Extra-dimension points with lambda < d use the Yukawa
/// closed form at the same (alpha, lambda) and are marked yukawa_extrapolated.
/// Per-point failures are collected, not thrown. Output is independent of thread count.
ExclusionCurve scan(const ScanSpec& spec, const Scenario& base, const QuadratureSettings& settings = {});

struct DistanceOptimum {
  double d_opt = 0.0;
  double alpha_limit = 0.0;
  double searched_min = 0.0;
  double searched_max = 0.0;
  /// max / min of alpha_limit over the bracketing grid.
  double flatness = 0.0;
  bool at_lower_bound = false;
  bool at_upper_bound = false;
};

/// Minimize alpha_limit over d in [d_min, d_max] with m = rho L_wire d^2. A 41-point log grid
/// brackets the minimum, then golden-section refines it to 1% in d. Extra-dimension searches
/// are clipped to d <= lambda, where the short-distance law applies.
DistanceOptimum optimize_distance(const ModelFamily& family, double lambda, const Scenario& base, double d_min,
                                  double d_max, PhaseMethod method = PhaseMethod::closed_form);

}  // namespace wirephase
