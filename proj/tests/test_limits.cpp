#include <doctest.h>

#include <cmath>
#include <vector>

#include "wirephase/errors.hpp"
#include "wirephase/limits.hpp"

using namespace wirephase;

namespace {

Scenario with_model(PotentialModel m, double d = 100e-6) {
  Scenario sc = Scenario::reference();
  sc.model = m;
  sc.wire.distance = d;
  return sc;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Brute-force minimizer over a dense log grid, the reference for optimize_distance.
double grid_argmin(const ModelFamily& family, double lambda, double lo, double hi, int points) {
  Scenario base = Scenario::reference();
  base.model = family.at(lambda);
  double best_d = lo;
  double best = INFINITY;
  for (int i = 0; i < points; ++i) {
    const double d = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    const double a = alpha_limit(scenario_at_distance(base, d, MassCoupling::mass_tracks_d));
    if (a < best) {
      best = a;
      best_d = d;
    }
  }
  return best_d;
}

}  // namespace

TEST_CASE("alpha limit inverts the unit-strength phase") {
  const Scenario ref = with_model(Yukawa{1.0, 100e-6});
  CHECK(alpha_limit(ref) == doctest::Approx(469.108330293683737).epsilon(1e-12));

  Scenario loose = ref;
  loose.detection_limit *= 2.0;
  CHECK(alpha_limit(loose) == doctest::Approx(2.0 * alpha_limit(ref)).epsilon(1e-15));

  const Scenario two = with_model(ExtraDim{2, 1.0, 100e-6});
  CHECK(alpha_limit(two) == doctest::Approx(two.detection_limit * std::sqrt(2.0) / (2.0 * prefactor(two))).epsilon(1e-14));

  // The strength set on the scenario does not matter.
  const Scenario strong = with_model(Yukawa{42.0, 100e-6});
  CHECK(alpha_limit(strong) == alpha_limit(ref));

  for (const PotentialModel& m : {PotentialModel{Yukawa{1.0, 3e-5}}, PotentialModel{ExtraDim{1, 1.0, 3e-4}},
                                  PotentialModel{ExtraDim{3, 1.0, 2e-4}}}) {
    const Scenario sc = with_model(m);
    for (PhaseMethod method : {PhaseMethod::closed_form, PhaseMethod::numerical}) {
      const double unit = phase_difference(sc, method).delta_phi;
      CHECK(alpha_limit(sc, method) * unit == doctest::Approx(sc.detection_limit).epsilon(1e-15));
    }
  }
}

TEST_CASE("alpha limit error paths") {
  CHECK_THROWS_AS(alpha_limit(with_model(Yukawa{1.0, 1e-8})), DegenerateSignalError);
  CHECK_THROWS_AS(alpha_limit(with_model(Newtonian{})), DomainError);
}

TEST_CASE("yukawa scan is monotone decreasing in lambda") {
  ScanSpec spec;
  spec.family = ModelFamily::yukawa();
  spec.d = 10e-6;
  for (MassCoupling c : {MassCoupling::fixed_mass, MassCoupling::mass_tracks_d}) {
    spec.coupling = c;
    const ExclusionCurve curve = scan(spec, Scenario::reference());
    REQUIRE(curve.points.size() == 61);
    CHECK(curve.failures.empty());
    CHECK(curve.points.front().lambda == 1e-5);
    CHECK(curve.points.back().lambda == 1e-3);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      CHECK(curve.points[i].lambda > curve.points[i - 1].lambda);
      CHECK(curve.points[i].alpha_limit < curve.points[i - 1].alpha_limit);
      CHECK(curve.points[i].regime == Regime::native);
    }
  }
}

TEST_CASE("extra-dimension scan substitutes the Yukawa form below d") {
  ScanSpec spec;
  spec.family = ModelFamily::extradim(2);
  spec.d = 100e-6;
  const Scenario base = Scenario::reference();
  const ExclusionCurve curve = scan(spec, base);
  REQUIRE(curve.points.size() == 61);
  int flagged = 0;
  for (const auto& p : curve.points) {
    const Scenario at = scenario_at_distance(base, spec.d, spec.coupling);
    if (p.lambda < spec.d) {
      ++flagged;
      CHECK(p.regime == Regime::yukawa_extrapolated);
      Scenario y = at;
      y.model = Yukawa{1.0, p.lambda};
      CHECK(p.alpha_limit == alpha_limit(y));
    } else {
      CHECK(p.regime == Regime::native);
      Scenario x = at;
      x.model = ExtraDim{2, 1.0, p.lambda};
      CHECK(p.alpha_limit == alpha_limit(x));
    }
  }
  CHECK(flagged >= 30);
  CHECK(flagged <= 31);
}

TEST_CASE("degenerate grid repeats the point") {
  ScanSpec spec;
  spec.grid = {5e-5, 5e-5, 2};
  const ExclusionCurve curve = scan(spec, Scenario::reference());
  REQUIRE(curve.points.size() == 2);
  CHECK(curve.points[0] == curve.points[1]);

  spec.grid = {1e-4, 1e-5, 10};
  CHECK_THROWS_AS(scan(spec, Scenario::reference()), DomainError);
  spec.grid = {1e-5, 1e-4, 1};
  CHECK_THROWS_AS(scan(spec, Scenario::reference()), DomainError);
}

TEST_CASE("scan output does not depend on thread count") {
  ScanSpec spec;
  spec.family = ModelFamily::extradim(3);
  spec.d = 30e-6;
  spec.threads = 1;
  const ExclusionCurve serial = scan(spec, Scenario::reference());
  for (int t : {2, 4, 7}) {
    spec.threads = t;
    const ExclusionCurve parallel = scan(spec, Scenario::reference());
    CHECK(parallel.points == serial.points);
  }
}

TEST_CASE("failed points are recorded and the scan continues") {
  ScanSpec spec;
  spec.family = ModelFamily::yukawa();
  spec.d = 1e-3;
  spec.grid = {1e-7, 1e-4, 31};
  const ExclusionCurve curve = scan(spec, Scenario::reference());
  CHECK_FALSE(curve.failures.empty());
  CHECK_FALSE(curve.points.empty());
  CHECK(curve.points.size() + curve.failures.size() == 31);
  for (const auto& f : curve.failures) CHECK(f.lambda < curve.points.front().lambda);
}

TEST_CASE("yukawa distance optimum sits near lambda") {
  const double lambda = 100e-6;
  const DistanceOptimum opt = optimize_distance(ModelFamily::yukawa(), lambda, Scenario::reference(), 1e-6, 1e-3);
  CHECK(opt.d_opt > lambda / 2);
  CHECK(opt.d_opt < 2 * lambda);
  // Stationary point of x^2 K0(x): 2 K0(x) = x K1(x) at x = 1.5526512556...
  CHECK(rel(opt.d_opt, 1.55265125564536460 * lambda) < 1e-2);
  CHECK(rel(opt.d_opt, grid_argmin(ModelFamily::yukawa(), lambda, 1e-6, 1e-3, 4001)) < 1e-2);
  CHECK_FALSE(opt.at_lower_bound);
  CHECK_FALSE(opt.at_upper_bound);
}

TEST_CASE("extra-dimension optima follow d^(2-n)") {
  const double lambda = 100e-6;
  const Scenario base = Scenario::reference();

  const DistanceOptimum three = optimize_distance(ModelFamily::extradim(3), lambda, base, 1e-6, 1e-3);
  CHECK(three.at_lower_bound);
  CHECK(three.d_opt == doctest::Approx(1e-6).epsilon(1e-12));
  CHECK(rel(three.d_opt, grid_argmin(ModelFamily::extradim(3), lambda, 1e-6, lambda, 501)) < 1e-2);

  const DistanceOptimum one = optimize_distance(ModelFamily::extradim(1), lambda, base, 1e-6, 1e-3);
  CHECK(one.at_upper_bound);
  CHECK(one.d_opt == doctest::Approx(lambda).epsilon(1e-12));
  CHECK(one.searched_max == lambda);

  // n = 2: alpha_lim ~ sqrt(d^2 + lambda^2), so the ratio over [10, 100] um is sqrt(2 / 1.01).
  const DistanceOptimum two = optimize_distance(ModelFamily::extradim(2), lambda, base, 10e-6, 100e-6);
  CHECK(two.flatness == doctest::Approx(1.4071950894605838).epsilon(1e-9));
  CHECK(two.at_lower_bound);
}

TEST_CASE("wire distance trend at lambda = 100 um") {
  const double lambda = 100e-6;
  const Scenario base = Scenario::reference();
  const auto ratio = [&](int n) {
    Scenario sc = base;
    sc.model = ExtraDim{n, 1.0, lambda};
    return alpha_limit(scenario_at_distance(sc, 10e-6, MassCoupling::mass_tracks_d)) /
           alpha_limit(scenario_at_distance(sc, 100e-6, MassCoupling::mass_tracks_d));
  };
  // Frozen from extended-precision closed forms.
  CHECK(ratio(1) == doctest::Approx(5.33874915900257921).epsilon(1e-12));
  CHECK(ratio(2) == doctest::Approx(0.710633520177594792).epsilon(1e-12));
  CHECK(ratio(3) == doctest::Approx(0.0818653208243169719).epsilon(1e-12));
}

TEST_CASE("optimizer range errors") {
  const Scenario base = Scenario::reference();
  CHECK_THROWS_AS(optimize_distance(ModelFamily::yukawa(), 1e-4, base, 1e-4, 1e-4), DomainError);
  CHECK_THROWS_AS(optimize_distance(ModelFamily::yukawa(), 1e-4, base, 1e-3, 1e-5), DomainError);
  CHECK_THROWS_AS(optimize_distance(ModelFamily::yukawa(), 1e-4, base, 0.0, 1e-5), DomainError);
  CHECK_THROWS_AS(optimize_distance(ModelFamily::extradim(2), 1e-5, base, 1e-4, 1e-3), DomainError);
}
