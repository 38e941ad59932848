#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "wirephase/config.hpp"
#include "wirephase/interferometer.hpp"
#include "wirephase/quadrature.hpp"

namespace wirephase {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitDomain = 3,
  kExitIo = 4,
  kExitSelfCheck = 5,
};

inline constexpr const char* kOutputDirEnv = "WIREPHASE_OUTPUT_DIR";

struct PhaseOptions {
  std::optional<std::string> model;  // newtonian | yukawa | extradim
  std::optional<int> n;
  std::optional<double> strength;
  std::optional<double> range;
  std::optional<PhaseMethod> method;
};

struct OptimizeOptions {
  std::optional<double> lambda;
  double d_min = 1e-6;
  double d_max = 1e-3;
};

struct CheckOptions {
  std::optional<double> tolerance;
  QuadratureSettings quadrature;
};

struct OverlayOptions {
  std::filesystem::path ours;
  std::filesystem::path external;
  std::filesystem::path output;
  std::string our_label = "computed";
  std::string external_label = "external";
};

// Each command reports to `out`/`err` and returns an ExitCode value.
int cmd_phase(const RunConfig& config, const PhaseOptions& options, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, const std::optional<std::filesystem::path>& output, std::ostream& out,
             std::ostream& err);
int cmd_optimize(const RunConfig& config, const OptimizeOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int cmd_overlay(const OverlayOptions& options, std::ostream& out, std::ostream& err);

/// Resolve a relative output path against $WIREPHASE_OUTPUT_DIR when set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

/// Full command-line front end.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wirephase
