#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

// Output plumbing shared by the commands: numeric formatting, CSV and SVG
// rendering, and the run manifest that travels with every output file.

namespace phasekit {

inline constexpr const char* kToolVersion = "0.1.0";

// 12 significant digits, shortest general form (enough to make byte-level
// reproducibility checks meaningful without printing noise digits).
std::string format_double(double v);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;  // ordered for stable output
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
  std::string timestamp;
};

// Timestamp comes from SOURCE_DATE_EPOCH when set (reproducible-build
// convention), else the epoch itself, so reruns stay byte-identical.
RunManifest make_manifest(std::string command,
                          std::map<std::string, std::string> parameters, std::uint64_t seed);

nlohmann::ordered_json manifest_json(const RunManifest& manifest);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Comma-separated, LF endings, header row first.
std::string render_csv(const CsvTable& table);

// Binary write (no newline translation); creates or truncates.
void write_file(const std::string& path, const std::string& content);

// Writes the CSV and its manifest sidecar at <path>.manifest.json.
void write_csv_with_manifest(const std::string& path, const CsvTable& table,
                             const RunManifest& manifest);

struct SvgSeries {
  std::string label;
  std::string color;
  bool dashed = false;
  std::vector<std::pair<double, double>> points;
};

struct SvgGapMark {
  double x = 0.0;
  double y_from = 0.0;
  double y_to = 0.0;
  std::string label;
};

// Self-contained polyline plot: axes with ticks, legend, dashed vertical
// kink markers, optional gap annotation, manifest embedded as an XML
// comment.  No external plotting dependency; CSV stays the contract.
std::string render_svg_curves(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series,
                              const std::vector<double>& kink_xs,
                              const std::optional<SvgGapMark>& gap,
                              const RunManifest& manifest);

}  // namespace phasekit
