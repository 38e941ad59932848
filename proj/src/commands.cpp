#include "wirephase/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <variant>

#include "wirephase/curve_csv.hpp"
#include "wirephase/errors.hpp"
#include "wirephase/limits.hpp"
#include "wirephase/selfcheck.hpp"

namespace wirephase {

namespace {

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::string describe(const PotentialModel& model) {
  if (const auto* y = std::get_if<Yukawa>(&model)) {
    return "yukawa (alpha=" + sci(y->strength) + ", lambda=" + sci(y->range) + " m)";
  }
  if (const auto* x = std::get_if<ExtraDim>(&model)) {
    return "extradim n=" + std::to_string(x->n) + " (alpha=" + sci(x->strength) + ", lambda=" + sci(x->range) + " m)";
  }
  return "newtonian";
}

// Runs `body`, mapping the error taxonomy onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DegenerateSignalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

PotentialModel apply_overrides(const PotentialModel& base, const PhaseOptions& o) {
  double strength = 1.0;
  double range = model_range(base) > 0.0 ? model_range(base) : 100e-6;
  int n = 2;
  std::string kind = "newtonian";
  if (const auto* y = std::get_if<Yukawa>(&base)) {
    strength = y->strength;
    kind = "yukawa";
  } else if (const auto* x = std::get_if<ExtraDim>(&base)) {
    strength = x->strength;
    n = x->n;
    kind = "extradim";
  }
  kind = o.model.value_or(kind);
  strength = o.strength.value_or(strength);
  range = o.range.value_or(range);
  n = o.n.value_or(n);
  if (kind == "newtonian") return Newtonian{};
  if (kind == "yukawa") return Yukawa{strength, range};
  if (kind == "extradim") return ExtraDim{n, strength, range};
  throw ConfigError("--model must be newtonian, yukawa or extradim, got '" + kind + "'");
}

}  // namespace

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / path;
  }
  return path;
}

int cmd_phase(const RunConfig& config, const PhaseOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Scenario sc = config.scenario;
    sc.model = apply_overrides(sc.model, options);
    const PhaseMethod method = options.method.value_or(config.method);
    const PhaseResult r = phase_difference(sc, method);
    out << "model:            " << describe(sc.model) << "\n"
        << "method:           " << to_string(r.method) << "\n"
        << "prefactor:        " << sci(prefactor(sc)) << "\n"
        << "phi_lower:        " << sci(r.phi_lower) << " rad\n"
        << "phi_upper:        " << sci(r.phi_upper) << " rad\n"
        << "delta_phi:        " << sci(r.delta_phi) << " rad\n"
        << "detection_limit:  " << sci(sc.detection_limit) << " rad\n"
        << "detectable:       " << (std::abs(r.delta_phi) >= sc.detection_limit ? "yes" : "no") << "\n";
    out << "warnings:        ";
    if (r.warnings.empty()) out << " none";
    for (Warning w : r.warnings.items()) out << " " << to_string(w);
    out << "\n";
    if (r.warnings.contains(Warning::beam_separation_small) && method == PhaseMethod::closed_form) {
      out << "note: e < 5 lambda, the upper arm is not negligible; rerun with --method numerical\n";
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_scan(const RunConfig& config, const std::optional<std::filesystem::path>& output, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const ScanSpec spec = config.scan_spec();
    const ExclusionCurve curve = scan(spec, config.scenario);
    for (const auto& f : curve.failures) err << "warning: lambda=" << sci(f.lambda) << " skipped: " << f.message << "\n";
    const auto path = resolve_output_path(output.value_or(std::filesystem::path(config.output_path)));
    write_file_atomic(path, format_curve_csv(curve));
    std::size_t extrapolated = 0;
    for (const auto& p : curve.points) extrapolated += p.regime == Regime::yukawa_extrapolated;
    out << "wrote " << curve.points.size() << " rows (" << extrapolated << " yukawa_extrapolated) to "
        << path.string() << "\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_optimize(const RunConfig& config, const OptimizeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(options.d_min > 0.0) || !(options.d_max > options.d_min)) {
      throw ConfigError("--d-min must be positive and below --d-max");
    }
    const ScanSpec spec = config.scan_spec();
    const double lambda = options.lambda.value_or(model_range(config.scenario.model));
    const DistanceOptimum opt =
        optimize_distance(spec.family, lambda, config.scenario, options.d_min, options.d_max, config.method);
    out << "family:        " << spec.family.name() << "\n"
        << "lambda:        " << sci(lambda) << " m\n"
        << "searched:      [" << sci(opt.searched_min) << ", " << sci(opt.searched_max) << "] m\n"
        << "d_opt:         " << sci(opt.d_opt) << " m"
        << (opt.at_lower_bound ? " (lower bound)" : opt.at_upper_bound ? " (upper bound)" : "") << "\n"
        << "alpha_limit:   " << sci(opt.alpha_limit) << "\n"
        << "flatness:      " << sci(opt.flatness) << " (max/min alpha_limit over range)\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    options.quadrature.validate();
    bool ok = true;
    for (const auto& r : run_self_checks(options.quadrature, options.tolerance)) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": max deviation " << sci(r.max_deviation)
          << " (threshold " << sci(r.threshold) << ")\n";
      ok = ok && r.passed;
    }
    return static_cast<int>(ok ? kExitOk : kExitSelfCheck);
  });
}

int cmd_overlay(const OverlayOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CurveFile ours = read_curve_csv(options.ours, false);
    const CurveFile external = read_curve_csv(options.external, true);
    if (external.curve.points.empty()) err << "warning: " << options.external.string() << " has no data rows\n";
    if (options.our_label == options.external_label) throw ConfigError("overlay labels must differ");
    const auto path = resolve_output_path(options.output);
    write_file_atomic(path, format_overlay(ours, options.our_label, external, options.external_label));
    out << "wrote " << ours.curve.points.size() + external.curve.points.size() << " rows to " << path.string()
        << "\n";
    return static_cast<int>(kExitOk);
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atom-interferometer phase and exclusion limits for a wire test mass"};
  app.set_version_flag("--version", "wirephase 1.0.0");
  std::string config_path;
  bool dump = false;
  app.add_option("-c,--config", config_path, "Configuration file (key = value with sections)");
  app.add_flag("--dump-config", dump, "Print the effective configuration and exit");
  app.require_subcommand(0, 1);

  const std::map<std::string, PhaseMethod> methods{{"closed", PhaseMethod::closed_form},
                                                   {"numerical", PhaseMethod::numerical}};

  PhaseOptions phase_opts;
  std::string phase_method;
  auto* phase = app.add_subcommand("phase", "Phase difference for the configured scenario");
  phase->add_option("--model", phase_opts.model, "newtonian | yukawa | extradim");
  phase->add_option("--n", phase_opts.n, "Number of extra dimensions")->check(CLI::PositiveNumber);
  phase->add_option("--strength", phase_opts.strength, "Coupling strength alpha");
  phase->add_option("--range", phase_opts.range, "Range lambda (m)")->check(CLI::PositiveNumber);
  phase->add_option("--method", phase_method, "closed | numerical")->check(CLI::IsMember({"closed", "numerical"}));

  std::string scan_output;
  int scan_threads = -1;
  auto* scan_cmd = app.add_subcommand("scan", "Exclusion curve alpha(lambda) as CSV");
  scan_cmd->add_option("-o,--output", scan_output, "Output CSV path");
  scan_cmd->add_option("--threads", scan_threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  OptimizeOptions opt_opts;
  auto* optimize = app.add_subcommand("optimize", "Wire distance minimizing alpha_limit (m grows as d^2)");
  optimize->add_option("--lambda", opt_opts.lambda, "Range lambda (m); defaults to the model range");
  optimize->add_option("--d-min", opt_opts.d_min, "Smallest distance (m)");
  optimize->add_option("--d-max", opt_opts.d_max, "Largest distance (m)");

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Run the oracle self-check sweeps");
  check->add_option("--tolerance", check_opts.tolerance, "Replace every sweep threshold");
  check->add_option("--quad-tol", check_opts.quadrature.relative_tolerance, "Quadrature relative tolerance");
  check->add_option("--max-subdivisions", check_opts.quadrature.max_subdivisions, "Quadrature subdivision budget");

  OverlayOptions overlay_opts;
  std::string overlay_ours;
  std::string overlay_external;
  std::string overlay_output = "overlay.csv";
  auto* overlay = app.add_subcommand("overlay", "Merge a computed curve with an external one (long format)");
  overlay->add_option("ours", overlay_ours, "Curve CSV produced by scan")->required();
  overlay->add_option("external", overlay_external, "External CSV (lambda_m,alpha_limit[,regime])")->required();
  overlay->add_option("-o,--output", overlay_output, "Merged output path");
  overlay->add_option("--label", overlay_opts.our_label, "Source label for the computed curve");
  overlay->add_option("--external-label", overlay_opts.external_label, "Source label for the external curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  RunConfig config;
  if (!config_path.empty()) {
    try {
      config = load_config(config_path);
    } catch (const ConfigError& e) {
      err << "error: " << e.what() << "\n";
      return kExitConfig;
    }
  }

  if (dump) {
    out << dump_config(config);
    return kExitOk;
  }
  if (phase->parsed()) {
    if (!phase_method.empty()) phase_opts.method = methods.at(phase_method);
    return cmd_phase(config, phase_opts, out, err);
  }
  if (scan_cmd->parsed()) {
    if (scan_threads >= 0) config.threads = scan_threads;
    std::optional<std::filesystem::path> path;
    if (!scan_output.empty()) path = scan_output;
    return cmd_scan(config, path, out, err);
  }
  if (optimize->parsed()) return cmd_optimize(config, opt_opts, out, err);
  if (check->parsed()) return cmd_check(check_opts, out, err);
  if (overlay->parsed()) {
    overlay_opts.ours = overlay_ours;
    overlay_opts.external = overlay_external;
    overlay_opts.output = overlay_output;
    return cmd_overlay(overlay_opts, out, err);
  }
  out << app.help();
  return kExitConfig;
}

}  // namespace wirephase
