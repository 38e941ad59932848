#include "wirephase/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wirephase/errors.hpp"

namespace wirephase {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

void PhysicalConstants::validate() const {
  require_positive(G, "G");
  require_positive(hbar, "hbar");
}

void BeamParams::validate() const {
  require_positive(atom_mass, "atom_mass");
  require_positive(speed, "speed");
}

WireParams WireParams::with_side_equal_distance(double length, double density, double distance) {
  return WireParams{length, density, distance, distance};
}

void WireParams::validate() const {
  require_positive(length, "wire length");
  require_positive(volume_density, "wire density");
  require_positive(cross_side, "wire cross_side");
  require_positive(distance, "wire distance");
}

void InterferometerGeometry::validate() const {
  require_positive(grating_spacing, "grating_spacing");
  require_positive(beam_separation, "beam_separation");
}

void validate(const PotentialModel& model) {
  if (const auto* y = std::get_if<Yukawa>(&model)) {
    require_positive(y->range, "yukawa range");
    if (!std::isfinite(y->strength)) throw DomainError("yukawa strength must be finite");
  } else if (const auto* x = std::get_if<ExtraDim>(&model)) {
    require_positive(x->range, "extra-dimension range");
    if (!std::isfinite(x->strength)) throw DomainError("extra-dimension strength must be finite");
    if (x->n < 1) throw DomainError("extra-dimension count n must be >= 1 (use the Newtonian model for n = 0)");
  }
}

std::string model_name(const PotentialModel& model) {
  if (std::holds_alternative<Newtonian>(model)) return "newtonian";
  if (std::holds_alternative<Yukawa>(model)) return "yukawa";
  return "extradim(n=" + std::to_string(std::get<ExtraDim>(model).n) + ")";
}

PotentialModel with_strength(const PotentialModel& model, double alpha) {
  PotentialModel out = model;
  if (auto* y = std::get_if<Yukawa>(&out)) y->strength = alpha;
  if (auto* x = std::get_if<ExtraDim>(&out)) x->strength = alpha;
  return out;
}

double model_range(const PotentialModel& model) {
  if (const auto* y = std::get_if<Yukawa>(&model)) return y->range;
  if (const auto* x = std::get_if<ExtraDim>(&model)) return x->range;
  return 0.0;
}

std::string_view to_string(Warning w) {
  switch (w) {
    case Warning::extradim_beyond_range: return "extradim_beyond_range";
    case Warning::beam_separation_small: return "beam_separation_small";
    case Warning::k0_underflow: return "k0_underflow";
    case Warning::wire_length_mismatch: return "wire_length_mismatch";
    case Warning::yukawa_extrapolated: return "yukawa_extrapolated";
  }
  return "unknown";
}

void WarningSet::add(Warning w) {
  if (!contains(w)) items_.push_back(w);
}

void WarningSet::merge(const WarningSet& other) {
  for (Warning w : other.items_) add(w);
}

bool WarningSet::contains(Warning w) const {
  return std::find(items_.begin(), items_.end(), w) != items_.end();
}

Scenario Scenario::reference() { return Scenario{}; }

void Scenario::validate() const {
  constants.validate();
  beam.validate();
  wire.validate();
  geometry.validate();
  wirephase::validate(model);
  require_positive(detection_limit, "detection_limit");
}

WarningSet Scenario::assumption_warnings() const {
  WarningSet w;
  const double range = model_range(model);
  if (range > 0.0 && geometry.beam_separation < 5.0 * range) w.add(Warning::beam_separation_small);
  if (const auto* x = std::get_if<ExtraDim>(&model); x && wire.distance > x->range) {
    w.add(Warning::extradim_beyond_range);
  }
  if (std::abs(wire.length - geometry.grating_spacing) > 1e-12 * geometry.grating_spacing) {
    w.add(Warning::wire_length_mismatch);
  }
  return w;
}

double prefactor(const Scenario& scenario) {
  const auto& c = scenario.constants;
  return c.G * scenario.beam.atom_mass * scenario.wire.mass() / (c.hbar * scenario.beam.speed);
}

double de_broglie_wavelength(const BeamParams& beam, const PhysicalConstants& constants) {
  beam.validate();
  const double h = 2.0 * std::numbers::pi * constants.hbar;
  return h / (beam.atom_mass * beam.speed);
}

}  // namespace wirephase
