#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "wirephase/limits.hpp"

namespace wirephase {

inline constexpr std::string_view kCurveHeader = "lambda_m,alpha_limit,regime";

/// Header plus one row per point, 17 significant digits, ascending lambda.
std::string format_curve_csv(const ExclusionCurve& curve);

struct CurveFile {
  ExclusionCurve curve;
  bool has_regime = true;
};

/// Reads the CurveCSV schema; with `regime_optional` the third column may be absent
/// (rows then default to native). Throws ConfigError on any schema violation.
CurveFile parse_curve_csv(std::istream& in, bool regime_optional = false, std::string_view source = "<csv>");
CurveFile read_curve_csv(const std::filesystem::path& path, bool regime_optional = false);

/// Long-format merge with a leading `source` column; rows are concatenated, never interpolated.
std::string format_overlay(const CurveFile& ours, std::string_view our_label, const CurveFile& external,
                           std::string_view external_label);

/// Write to a sibling temporary and rename over `path`. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace wirephase
