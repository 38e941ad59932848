#include "wirephase/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <variant>

#include "wirephase/errors.hpp"

namespace wirephase {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Raw model fields; the variant is assembled once all lines are read.
struct ModelFields {
  std::string type = "yukawa";
  double strength = 1.0;
  double range = 100e-6;
  int n = 2;
};

class Parser {
public:
  explicit Parser(std::string_view source) : source_(source) {}

  RunConfig run(std::istream& in) {
    std::string line;
    std::string section;
    int lineno = 0;
    bool cross_side_set = false;
    while (std::getline(in, line)) {
      ++lineno;
      std::string_view text = trim(line);
      if (text.empty() || text.front() == '#' || text.front() == ';') continue;
      if (text.front() == '[') {
        if (text.back() != ']') fail(lineno, "malformed section header '" + std::string(text) + "'");
        section = std::string(trim(text.substr(1, text.size() - 2)));
        if (!kSections.contains(section)) fail(lineno, "unknown section [" + section + "]");
        continue;
      }
      const auto eq = text.find('=');
      if (eq == std::string_view::npos) fail(lineno, "expected 'key = value'");
      const std::string key(trim(text.substr(0, eq)));
      const std::string value(trim(text.substr(eq + 1)));
      if (section.empty()) fail(lineno, "key '" + key + "' appears before any section");
      const std::string qualified = section + "." + key;
      if (!seen_.insert(qualified).second) fail(lineno, "duplicate key '" + qualified + "'");
      if (qualified == "wire.cross_side") cross_side_set = true;
      assign(lineno, qualified, value);
    }
    if (!cross_side_set) config_.scenario.wire.cross_side = config_.scenario.wire.distance;
    build_model();
    check_grid();
    return config_;
  }

private:
  inline static const std::set<std::string> kSections = {"beam", "wire", "geometry", "model", "scan", "output"};

  [[noreturn]] void fail(int lineno, const std::string& msg) const {
    throw ConfigError(std::string(source_) + ":" + std::to_string(lineno) + ": " + msg);
  }

  double number(int lineno, const std::string& key, const std::string& value) const {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out)) {
      fail(lineno, "key '" + key + "' expects a number, got '" + value + "'");
    }
    return out;
  }

  double positive(int lineno, const std::string& key, const std::string& value) const {
    const double v = number(lineno, key, value);
    if (!(v > 0.0)) fail(lineno, "key '" + key + "' must be positive, got " + value);
    return v;
  }

  int integer(int lineno, const std::string& key, const std::string& value, int min_value) const {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      fail(lineno, "key '" + key + "' expects an integer, got '" + value + "'");
    }
    if (out < min_value) fail(lineno, "key '" + key + "' must be >= " + std::to_string(min_value));
    return out;
  }

  void assign(int lineno, const std::string& key, const std::string& value) {
    auto& sc = config_.scenario;
    if (key == "beam.atom_mass") {
      sc.beam.atom_mass = positive(lineno, key, value);
    } else if (key == "beam.speed") {
      sc.beam.speed = positive(lineno, key, value);
    } else if (key == "wire.length") {
      sc.wire.length = positive(lineno, key, value);
    } else if (key == "wire.density") {
      sc.wire.volume_density = positive(lineno, key, value);
    } else if (key == "wire.cross_side") {
      sc.wire.cross_side = positive(lineno, key, value);
    } else if (key == "wire.distance") {
      sc.wire.distance = positive(lineno, key, value);
    } else if (key == "geometry.grating_spacing") {
      sc.geometry.grating_spacing = positive(lineno, key, value);
    } else if (key == "geometry.beam_separation") {
      sc.geometry.beam_separation = positive(lineno, key, value);
    } else if (key == "model.type") {
      if (value != "newtonian" && value != "yukawa" && value != "extradim") {
        fail(lineno, "key 'model.type' must be newtonian, yukawa or extradim, got '" + value + "'");
      }
      model_.type = value;
    } else if (key == "model.strength") {
      model_.strength = number(lineno, key, value);
    } else if (key == "model.range") {
      model_.range = positive(lineno, key, value);
    } else if (key == "model.n") {
      model_.n = integer(lineno, key, value, 1);
    } else if (key == "scan.lambda_min") {
      config_.grid.min = positive(lineno, key, value);
    } else if (key == "scan.lambda_max") {
      config_.grid.max = positive(lineno, key, value);
    } else if (key == "scan.points") {
      config_.grid.points = integer(lineno, key, value, 2);
    } else if (key == "scan.mass_coupling") {
      if (value == "fixed_mass") {
        config_.coupling = MassCoupling::fixed_mass;
      } else if (value == "mass_tracks_d") {
        config_.coupling = MassCoupling::mass_tracks_d;
      } else {
        fail(lineno, "key 'scan.mass_coupling' must be fixed_mass or mass_tracks_d");
      }
    } else if (key == "scan.method") {
      if (value == "closed" || value == "closed_form") {
        config_.method = PhaseMethod::closed_form;
      } else if (value == "numerical") {
        config_.method = PhaseMethod::numerical;
      } else {
        fail(lineno, "key 'scan.method' must be closed or numerical");
      }
    } else if (key == "scan.threads") {
      config_.threads = integer(lineno, key, value, 0);
    } else if (key == "scan.detection_limit") {
      sc.detection_limit = positive(lineno, key, value);
    } else if (key == "output.path") {
      if (value.empty()) fail(lineno, "key 'output.path' must not be empty");
      config_.output_path = value;
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
    last_line_[key] = lineno;
  }

  void build_model() {
    auto& sc = config_.scenario;
    if (model_.type == "newtonian") {
      sc.model = Newtonian{};
    } else if (model_.type == "yukawa") {
      sc.model = Yukawa{model_.strength, model_.range};
    } else {
      sc.model = ExtraDim{model_.n, model_.strength, model_.range};
    }
  }

  void check_grid() const {
    if (config_.grid.max < config_.grid.min) {
      const auto it = last_line_.find("scan.lambda_max");
      fail(it == last_line_.end() ? 0 : it->second, "key 'scan.lambda_max' must be >= scan.lambda_min");
    }
  }

  std::string_view source_;
  RunConfig config_;
  ModelFields model_;
  std::set<std::string> seen_;
  std::map<std::string, int> last_line_;
};

bool same_model(const PotentialModel& a, const PotentialModel& b) {
  if (a.index() != b.index()) return false;
  if (const auto* y = std::get_if<Yukawa>(&a)) {
    const auto& o = std::get<Yukawa>(b);
    return y->strength == o.strength && y->range == o.range;
  }
  if (const auto* x = std::get_if<ExtraDim>(&a)) {
    const auto& o = std::get<ExtraDim>(b);
    return x->n == o.n && x->strength == o.strength && x->range == o.range;
  }
  return true;
}

}  // namespace

ScanSpec RunConfig::scan_spec() const {
  ScanSpec spec;
  spec.grid = grid;
  spec.d = scenario.wire.distance;
  spec.coupling = coupling;
  spec.method = method;
  spec.threads = threads;
  if (std::holds_alternative<Yukawa>(scenario.model)) {
    spec.family = ModelFamily::yukawa();
  } else if (const auto* x = std::get_if<ExtraDim>(&scenario.model)) {
    spec.family = ModelFamily::extradim(x->n);
  } else {
    throw DomainError("scans need a yukawa or extradim model");
  }
  return spec;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  const auto& s = a.scenario;
  const auto& t = b.scenario;
  return s.constants.G == t.constants.G && s.constants.hbar == t.constants.hbar &&
         s.beam.atom_mass == t.beam.atom_mass && s.beam.speed == t.beam.speed &&
         s.wire.length == t.wire.length && s.wire.volume_density == t.wire.volume_density &&
         s.wire.cross_side == t.wire.cross_side && s.wire.distance == t.wire.distance &&
         s.geometry.grating_spacing == t.geometry.grating_spacing &&
         s.geometry.beam_separation == t.geometry.beam_separation && same_model(s.model, t.model) &&
         s.detection_limit == t.detection_limit && a.grid.min == b.grid.min && a.grid.max == b.grid.max &&
         a.grid.points == b.grid.points && a.coupling == b.coupling && a.method == b.method &&
         a.threads == b.threads && a.output_path == b.output_path;
}

RunConfig parse_config(std::istream& in, std::string_view source) { return Parser(source).run(in); }

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, path.string());
}

std::string dump_config(const RunConfig& config) {
  const auto& sc = config.scenario;
  std::ostringstream out;
  out << "[beam]\n"
      << "atom_mass = " << fmt_double(sc.beam.atom_mass) << "\n"
      << "speed = " << fmt_double(sc.beam.speed) << "\n\n"
      << "[wire]\n"
      << "length = " << fmt_double(sc.wire.length) << "\n"
      << "density = " << fmt_double(sc.wire.volume_density) << "\n"
      << "cross_side = " << fmt_double(sc.wire.cross_side) << "\n"
      << "distance = " << fmt_double(sc.wire.distance) << "\n\n"
      << "[geometry]\n"
      << "grating_spacing = " << fmt_double(sc.geometry.grating_spacing) << "\n"
      << "beam_separation = " << fmt_double(sc.geometry.beam_separation) << "\n\n"
      << "[model]\n";
  if (std::holds_alternative<Newtonian>(sc.model)) {
    out << "type = newtonian\n";
  } else if (const auto* y = std::get_if<Yukawa>(&sc.model)) {
    out << "type = yukawa\n"
        << "strength = " << fmt_double(y->strength) << "\n"
        << "range = " << fmt_double(y->range) << "\n";
  } else {
    const auto& x = std::get<ExtraDim>(sc.model);
    out << "type = extradim\n"
        << "n = " << x.n << "\n"
        << "strength = " << fmt_double(x.strength) << "\n"
        << "range = " << fmt_double(x.range) << "\n";
  }
  out << "\n[scan]\n"
      << "lambda_min = " << fmt_double(config.grid.min) << "\n"
      << "lambda_max = " << fmt_double(config.grid.max) << "\n"
      << "points = " << config.grid.points << "\n"
      << "mass_coupling = " << to_string(config.coupling) << "\n"
      << "method = " << (config.method == PhaseMethod::closed_form ? "closed" : "numerical") << "\n"
      << "threads = " << config.threads << "\n"
      << "detection_limit = " << fmt_double(sc.detection_limit) << "\n\n"
      << "[output]\n"
      << "path = " << config.output_path << "\n";
  return out.str();
}

}  // namespace wirephase
