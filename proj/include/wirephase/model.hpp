#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wirephase {

/// CODATA-2018 values, SI units.
struct PhysicalConstants {
  double G = 6.67430e-11;        // m^3 kg^-1 s^-2
  double hbar = 1.054571817e-34;  // J s

  static PhysicalConstants codata2018() { return {}; }
  void validate() const;
};

/// Probe atom.
struct BeamParams {
  double atom_mass = 2e-25;  // kg, slowed cesium
  double speed = 10.0;       // m/s

  void validate() const;
};

/// Wire test mass of square cross-section a x a, at distance d from the lower arm.
struct WireParams {
  double length = 1.0;           // m
  double volume_density = 2e4;   // kg/m^3 (relative density 20)
  double cross_side = 100e-6;    // m
  double distance = 100e-6;      // m

  /// Wire with a = d, the convention used for exclusion plots.
  static WireParams with_side_equal_distance(double length, double density, double distance);

  double linear_density() const { return volume_density * cross_side * cross_side; }
  double mass() const { return linear_density() * length; }
  void validate() const;
};

/// Lower arm x = 0, upper arm x = e (1 + z/L) for z in [-L, 0].
struct InterferometerGeometry {
  double grating_spacing = 1.0;    // L, m
  double beam_separation = 1e-3;   // e, m

  double upper_arm_offset(double z) const { return beam_separation * (1.0 + z / grating_spacing); }
  void validate() const;
};

struct Newtonian {};

struct Yukawa {
  double strength = 1.0;  // alpha_Y
  double range = 100e-6;  // lambda_Y, m
};

/// Short-distance law from n compact extra dimensions, valid for r << range.
struct ExtraDim {
  int n = 2;
  double strength = 1.0;
  double range = 100e-6;
};

using PotentialModel = std::variant<Newtonian, Yukawa, ExtraDim>;

void validate(const PotentialModel& model);
std::string model_name(const PotentialModel& model);
/// Same model with strength set to `alpha`; Newtonian is returned unchanged.
PotentialModel with_strength(const PotentialModel& model, double alpha);
/// Interaction range, or 0 for Newtonian.
double model_range(const PotentialModel& model);

/// Flags raised when a computation leaves the regime its approximation assumes.
enum class Warning : std::uint8_t {
  extradim_beyond_range,    // s > lambda_n
  beam_separation_small,    // e < 5 lambda
  k0_underflow,             // K0 result flushed to zero
  wire_length_mismatch,     // wire length differs from grating spacing
  yukawa_extrapolated,      // lambda < d, Yukawa form substituted
};

std::string_view to_string(Warning w);

class WarningSet {
public:
  void add(Warning w);
  void merge(const WarningSet& other);
  bool contains(Warning w) const;
  bool empty() const { return items_.empty(); }
  const std::vector<Warning>& items() const { return items_; }

  friend bool operator==(const WarningSet&, const WarningSet&) = default;

private:
  std::vector<Warning> items_;
};

struct Scenario {
  PhysicalConstants constants;
  BeamParams beam;
  WireParams wire;
  InterferometerGeometry geometry;
  PotentialModel model = Yukawa{};
  double detection_limit = 1e-3;  // rad

  /// Cesium beam at 10 m/s, 1 m gold wire of 100 um side at d = 100 um, e = 1 mm.
  static Scenario reference();

  /// Throws DomainError on any non-positive physical quantity.
  void validate() const;
  /// Validity warnings that depend only on the parameters.
  WarningSet assumption_warnings() const;
};

/// Dimensionless phase scale G M m / (hbar v).
double prefactor(const Scenario& scenario);

/// h / (M v).
double de_broglie_wavelength(const BeamParams& beam, const PhysicalConstants& constants = {});

}  // namespace wirephase
