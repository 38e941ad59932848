#include "wirephase/curve_csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "wirephase/errors.hpp"

#include <unistd.h>

namespace wirephase {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_curve_csv(const ExclusionCurve& curve) {
  std::string out(kCurveHeader);
  out += '\n';
  for (const auto& p : curve.points) {
    out += fmt_double(p.lambda);
    out += ',';
    out += fmt_double(p.alpha_limit);
    out += ',';
    out += to_string(p.regime);
    out += '\n';
  }
  return out;
}

CurveFile parse_curve_csv(std::istream& in, bool regime_optional, std::string_view source) {
  const auto fail = [&](int lineno, const std::string& msg) {
    throw ConfigError(std::string(source) + ":" + std::to_string(lineno) + ": " + msg);
  };
  std::string line;
  if (!std::getline(in, line)) fail(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  CurveFile file;
  if (line == kCurveHeader) {
    file.has_regime = true;
  } else if (regime_optional && line == "lambda_m,alpha_limit") {
    file.has_regime = false;
  } else {
    fail(1, "unexpected header '" + line + "', want '" + std::string(kCurveHeader) + "'");
  }
  const std::size_t columns = file.has_regime ? 3 : 2;

  int lineno = 1;
  double previous = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != columns) fail(lineno, "expected " + std::to_string(columns) + " columns");
    ExclusionPoint p;
    for (int k = 0; k < 2; ++k) {
      double v = 0.0;
      const auto f = fields[k];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size() || !(v > 0.0) || !std::isfinite(v)) {
        fail(lineno, "column " + std::to_string(k + 1) + " must be a positive number");
      }
      (k == 0 ? p.lambda : p.alpha_limit) = v;
    }
    if (file.has_regime) {
      if (fields[2] == "native") {
        p.regime = Regime::native;
      } else if (fields[2] == "yukawa_extrapolated") {
        p.regime = Regime::yukawa_extrapolated;
      } else {
        fail(lineno, "regime must be native or yukawa_extrapolated");
      }
    }
    if (p.lambda < previous) fail(lineno, "rows must be sorted by ascending lambda_m");
    previous = p.lambda;
    file.curve.points.push_back(p);
  }
  return file;
}

CurveFile read_curve_csv(const std::filesystem::path& path, bool regime_optional) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_curve_csv(in, regime_optional, path.string());
}

std::string format_overlay(const CurveFile& ours, std::string_view our_label, const CurveFile& external,
                           std::string_view external_label) {
  std::string out = "source,lambda_m,alpha_limit,regime\n";
  const auto emit = [&out](const CurveFile& f, std::string_view label) {
    for (const auto& p : f.curve.points) {
      out += label;
      out += ',';
      out += fmt_double(p.lambda);
      out += ',';
      out += fmt_double(p.alpha_limit);
      out += ',';
      if (f.has_regime) out += to_string(p.regime);
      out += '\n';
    }
  };
  emit(ours, our_label);
  emit(external, external_label);
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

}  // namespace wirephase
