#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wirephase/errors.hpp"
#include "wirephase/potentials.hpp"
#include "wirephase/quadrature.hpp"

using namespace wirephase;

namespace {

const BeamParams kBeam{};
const WireParams kWire{};
const PhysicalConstants kConst{};
const double kGMmu = kConst.G * kBeam.atom_mass * kWire.linear_density();

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("yukawa infinite wire") {
  const Yukawa y{1.0, 1e-4};
  CHECK(yukawa_wire_potential(1e-4, Yukawa{0.0, 1e-4}, kBeam, kWire).energy == 0.0);

  const double at_range = yukawa_wire_potential(1e-4, y, kBeam, kWire).energy;
  CHECK(at_range == doctest::Approx(-2.0 * kGMmu * 0.421024438240708).epsilon(1e-12));
  CHECK(at_range < 0.0);

  const double far = yukawa_wire_potential(1e-3, y, kBeam, kWire).energy;
  CHECK(far / at_range == doctest::Approx(4.22304757188522733e-5).epsilon(1e-10));

  double prev = 0.0;
  for (double s : logspace(1e-7, 1e-2, 200)) {
    const double mag = std::abs(yukawa_wire_potential(s, y, kBeam, kWire).energy);
    if (prev > 0.0) CHECK(mag < prev);
    prev = mag;
  }

  CHECK_THROWS_AS(yukawa_wire_potential(0.0, y, kBeam, kWire), DomainError);
  CHECK_THROWS_AS(yukawa_wire_potential(-1e-6, y, kBeam, kWire), DomainError);
  CHECK(yukawa_wire_potential(1.0, y, kBeam, kWire).warnings.contains(Warning::k0_underflow));
}

TEST_CASE("finite wire converges to the infinite wire") {
  const Yukawa y{1.0, 1e-4};
  const WireParams wire{1.0, 2e4, 1e-4, 1e-4};
  const FieldPoint mid{0.0, -0.5};
  const double infinite = yukawa_wire_potential(1e-4, y, kBeam, wire).energy;
  CHECK(rel(yukawa_wire_potential_finite(mid, y, kBeam, wire), infinite) <= 1e-6);

  WireParams short_wire = wire;
  short_wire.length = 5e-4;
  const double short_mid = yukawa_wire_potential_finite({0.0, -2.5e-4}, y, kBeam, short_wire);
  const double short_inf = yukawa_wire_potential(1e-4, y, kBeam, short_wire).energy;
  CHECK(std::abs(short_mid) < std::abs(short_inf));

  const double beyond = yukawa_wire_potential_finite({0.0, -1.0 - 1e-3}, y, kBeam, wire);
  CHECK(std::abs(beyond) < 1e-3 * std::abs(yukawa_wire_potential_finite(mid, y, kBeam, wire)));

  CHECK(yukawa_wire_potential_finite(mid, Yukawa{0.0, 1e-4}, kBeam, wire) == 0.0);
  CHECK_THROWS_AS(yukawa_wire_potential_finite({-2e-4, -0.5}, y, kBeam, wire), DomainError);
}

TEST_CASE("fringe effects vanish once L >= 1e4 lambda") {
  for (double lambda : {1e-6, 1e-5, 1e-4}) {
    WireParams wire{1e4 * lambda, 2e4, 1e-4, lambda};
    const Yukawa y{1.0, lambda};
    const double inf = yukawa_wire_potential(lambda, y, kBeam, wire).energy;
    const double fin = yukawa_wire_potential_finite({0.0, -0.5 * wire.length}, y, kBeam, wire);
    CHECK(rel(fin, inf) <= 1e-6);
  }
}

TEST_CASE("yukawa closed form vs finite-wire quadrature on a log grid") {
  double worst = 0.0;
  for (double lambda : logspace(1e-6, 1e-3, 20)) {
    const Yukawa y{1.0, lambda};
    for (double ratio : logspace(1e-2, 10.0, 20)) {
      const double s = ratio * lambda;
      WireParams wire{1.0, 2e4, 1e-4, s};
      const double inf = yukawa_wire_potential(s, y, kBeam, wire).energy;
      const double fin = yukawa_wire_potential_finite({0.0, -0.5}, y, kBeam, wire);
      worst = std::max(worst, rel(fin, inf));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("extra-dimension wire potential") {
  const ExtraDim two{2, 1.0, 1e-4};
  const auto at_range = extradim_wire_potential(1e-4, two, kBeam, kWire);
  CHECK(at_range.energy == doctest::Approx(-std::sqrt(2.0) * kGMmu).epsilon(1e-14));
  CHECK(at_range.warnings.empty());
  CHECK(extradim_wire_potential(1e-4, ExtraDim{2, 0.0, 1e-4}, kBeam, kWire).energy == 0.0);

  const double close = extradim_wire_potential(1e-6, two, kBeam, kWire).energy;
  CHECK(close / at_range.energy == doctest::Approx(14141.4285699783535).epsilon(1e-12));

  CHECK(extradim_wire_potential(2e-4, two, kBeam, kWire).warnings.contains(Warning::extradim_beyond_range));
  CHECK_THROWS_AS(extradim_wire_potential(0.0, two, kBeam, kWire), DomainError);
}

TEST_CASE("extra-dimension closed form vs quadrature") {
  for (int n = 1; n <= 3; ++n) {
    const ExtraDim m{n, 1.0, 1e-4};
    for (double s : {1e-5, 1e-4}) {
      CHECK(rel(extradim_wire_potential(s, m, kBeam, kWire).energy,
                extradim_wire_potential_oracle(s, m, kBeam, kWire)) <= 1e-8);
    }
  }
  const ExtraDim four{4, 1.0, 1e-4};
  CHECK(rel(extradim_wire_potential(1e-4 / 3, four, kBeam, kWire).energy,
            extradim_wire_potential_oracle(1e-4 / 3, four, kBeam, kWire)) <= 1e-8);

  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (double lambda : logspace(1e-6, 1e-3, 20)) {
      for (double ratio : logspace(1e-3, 1.0, 20)) {
        const ExtraDim m{n, 1.0, lambda};
        const double s = ratio * lambda;
        worst = std::max(worst, rel(extradim_wire_potential(s, m, kBeam, kWire).energy,
                                    extradim_wire_potential_oracle(s, m, kBeam, kWire)));
      }
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("truncated wire integrand is even in u") {
  const double s = 3e-5;
  const double lambda = 1e-4;
  const auto f = [&](double u) {
    const double r = std::hypot(s, u);
    return std::pow(lambda / r, 2) / r;
  };
  const double left = integrate(f, -lambda, 0.0).value;
  const double right = integrate(f, 0.0, lambda).value;
  CHECK(left == doctest::Approx(right).epsilon(1e-13));
}

TEST_CASE("short-distance law: |V_n| falls as s^-n along the wire") {
  for (int n = 1; n <= 3; ++n) {
    const ExtraDim m{n, 1.0, 1e-4};
    const auto ss = logspace(1e-8, 1e-6, 41);
    std::vector<double> vs;
    for (double s : ss) vs.push_back(std::abs(extradim_wire_potential(s, m, kBeam, kWire).energy));
    CHECK(fitted_slope(ss, vs) == doctest::Approx(-static_cast<double>(n)).epsilon(1e-2 / n));
  }
}

TEST_CASE("newtonian wire potential") {
  const double d = 1e-5;
  CHECK(newtonian_wire_potential(0.0, d, kBeam, kWire) == 0.0);
  CHECK(newtonian_wire_potential(100 * d, d, kBeam, kWire) ==
        doctest::Approx(2.0 * kGMmu * std::log(101.0)).epsilon(1e-14));
  CHECK(newtonian_wire_potential(100 * d, d, kBeam, kWire) / kGMmu == doctest::Approx(9.2303).epsilon(1e-4));
  CHECK(newtonian_wire_potential(d, d, kBeam, kWire) == doctest::Approx(2.0 * kGMmu * std::numbers::ln2));
  CHECK(newtonian_wire_potential(2 * d, d, kBeam, kWire) > newtonian_wire_potential(d, d, kBeam, kWire));
  CHECK_THROWS_AS(newtonian_wire_potential(-d, d, kBeam, kWire), DomainError);
  CHECK_THROWS_AS(newtonian_wire_potential(0.0, 0.0, kBeam, kWire), DomainError);
}

TEST_CASE("potentials are linear in alpha, G, M and mu") {
  const double s = 4e-5;
  const Yukawa y{1.0, 1e-4};
  const ExtraDim x{3, 1.0, 1e-4};
  const double vy = yukawa_wire_potential(s, y, kBeam, kWire).energy;
  const double vx = extradim_wire_potential(s, x, kBeam, kWire).energy;
  const double vn = newtonian_wire_potential(s, 1e-5, kBeam, kWire);

  CHECK(yukawa_wire_potential(s, Yukawa{3.5, 1e-4}, kBeam, kWire).energy == doctest::Approx(3.5 * vy).epsilon(1e-15));
  CHECK(extradim_wire_potential(s, ExtraDim{3, -2.0, 1e-4}, kBeam, kWire).energy ==
        doctest::Approx(-2.0 * vx).epsilon(1e-15));

  PhysicalConstants g2 = kConst;
  g2.G *= 2.0;
  BeamParams m3 = kBeam;
  m3.atom_mass *= 3.0;
  WireParams dense = kWire;
  dense.volume_density *= 4.0;
  CHECK(yukawa_wire_potential(s, y, kBeam, kWire, g2).energy == doctest::Approx(2.0 * vy).epsilon(1e-15));
  CHECK(extradim_wire_potential(s, x, m3, kWire).energy == doctest::Approx(3.0 * vx).epsilon(1e-15));
  CHECK(newtonian_wire_potential(s, 1e-5, kBeam, dense) == doctest::Approx(4.0 * vn).epsilon(1e-15));
}
