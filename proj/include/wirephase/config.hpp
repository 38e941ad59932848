#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "wirephase/limits.hpp"
#include "wirephase/model.hpp"

namespace wirephase {

/// Everything a run needs. The scan family and distance come from [model] and [wire].
struct RunConfig {
  Scenario scenario = Scenario::reference();
  LambdaGrid grid;
  MassCoupling coupling = MassCoupling::mass_tracks_d;
  PhaseMethod method = PhaseMethod::closed_form;
  int threads = 0;
  std::string output_path = "exclusion_curve.csv";

  /// Scan request derived from the scenario model (Newtonian throws DomainError).
  ScanSpec scan_spec() const;

  friend bool operator==(const RunConfig& a, const RunConfig& b);
};

/// Parse `key = value` lines grouped in [beam] [wire] [geometry] [model] [scan] [output].
/// Missing keys keep the reference defaults; wire.cross_side defaults to wire.distance.
/// Throws ConfigError naming the line and key on any unknown, duplicate or invalid entry.
RunConfig parse_config(std::istream& in, std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Serialize so that parse_config(dump_config(c)) == c.
std::string dump_config(const RunConfig& config);

}  // namespace wirephase
