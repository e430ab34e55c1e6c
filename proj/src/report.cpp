#include "phasekit/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "phasekit/errors.hpp"

namespace phasekit {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (ec != std::errc()) throw NumericalError("number formatting failed");
  return std::string(buf, ptr);
}

RunManifest make_manifest(std::string command,
                          std::map<std::string, std::string> parameters, std::uint64_t seed) {
  RunManifest m;
  m.command = std::move(command);
  m.parameters = std::move(parameters);
  m.seed = seed;

  std::time_t epoch = 0;
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(sde, &end, 10);
    if (end != sde && *end == '\0' && parsed >= 0) epoch = static_cast<std::time_t>(parsed);
  }
  std::tm tm_utc{};
  gmtime_r(&epoch, &tm_utc);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  m.timestamp = stamp;
  return m;
}

nlohmann::ordered_json manifest_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : manifest.parameters) params[k] = v;
  j["parameters"] = params;
  j["seed"] = manifest.seed;
  j["tool_version"] = manifest.tool_version;
  j["timestamp"] = manifest.timestamp;
  return j;
}

std::string render_csv(const CsvTable& table) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(',');
      out += cells[i];
    }
    out.push_back('\n');
  };
  append_row(table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw ValidationError("csv row width must match the header");
    }
    append_row(row);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open output file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw ValidationError("write failed: " + path);
}

void write_csv_with_manifest(const std::string& path, const CsvTable& table,
                             const RunManifest& manifest) {
  write_file(path, render_csv(table));
  write_file(path + ".manifest.json", manifest_json(manifest).dump(2) + "\n");
}

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void take(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

std::string svg_num(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  if (ec != std::errc()) return "0";
  return std::string(buf, ptr);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_svg_curves(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series,
                              const std::vector<double>& kink_xs,
                              const std::optional<SvgGapMark>& gap,
                              const RunManifest& manifest) {
  constexpr double kWidth = 800.0, kHeight = 520.0;
  constexpr double kLeft = 70.0, kRight = 770.0, kTop = 50.0, kBottom = 460.0;

  Range xr, yr;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      xr.take(x);
      yr.take(y);
    }
  }
  if (gap) {
    yr.take(gap->y_from);
    yr.take(gap->y_to);
  }
  xr.pad();
  yr.pad();
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft); };
  auto sy = [&](double y) { return kBottom - (y - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  svg << "<!-- manifest " << manifest_json(manifest).dump() << " -->\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << (kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"17\">"
      << xml_escape(title) << "</text>\n";

  // axes and ticks
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    svg << "<line x1=\"" << svg_num(sx(fx)) << "\" y1=\"" << kBottom << "\" x2=\""
        << svg_num(sx(fx)) << "\" y2=\"" << (kBottom + 5) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << svg_num(sx(fx)) << "\" y=\"" << (kBottom + 20)
        << "\" text-anchor=\"middle\">" << format_double(fx) << "</text>\n";
    svg << "<line x1=\"" << (kLeft - 5) << "\" y1=\"" << svg_num(sy(fy)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << svg_num(sy(fy)) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << (kLeft - 8) << "\" y=\"" << svg_num(sy(fy) + 4)
        << "\" text-anchor=\"end\">" << format_double(fy) << "</text>\n";
  }
  svg << "<text x=\"" << ((kLeft + kRight) / 2) << "\" y=\"" << (kBottom + 42)
      << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << ((kTop + kBottom) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << ((kTop + kBottom) / 2)
      << ")\">" << xml_escape(y_label) << "</text>\n";

  // kink markers
  for (double k : kink_xs) {
    if (k < xr.lo || k > xr.hi) continue;
    svg << "<line x1=\"" << svg_num(sx(k)) << "\" y1=\"" << kTop << "\" x2=\"" << svg_num(sx(k))
        << "\" y2=\"" << kBottom << "\" stroke=\"#888888\" stroke-dasharray=\"3,4\"/>\n";
  }

  // curves; non-finite points break the polyline into segments
  for (const auto& s : series) {
    std::vector<std::string> segments;
    std::string current;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        if (!current.empty()) segments.push_back(current);
        current.clear();
        continue;
      }
      if (!current.empty()) current += ' ';
      current += svg_num(sx(x)) + "," + svg_num(sy(y));
    }
    if (!current.empty()) segments.push_back(current);
    for (const auto& seg : segments) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\"";
      if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
      svg << " points=\"" << seg << "\"/>\n";
    }
  }

  // gap annotation (phase-transition magnitude at the boundary)
  if (gap) {
    const double gx = sx(gap->x);
    svg << "<line x1=\"" << svg_num(gx) << "\" y1=\"" << svg_num(sy(gap->y_from)) << "\" x2=\""
        << svg_num(gx) << "\" y2=\"" << svg_num(sy(gap->y_to))
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double y : {gap->y_from, gap->y_to}) {
      svg << "<line x1=\"" << svg_num(gx - 5) << "\" y1=\"" << svg_num(sy(y)) << "\" x2=\""
          << svg_num(gx + 5) << "\" y2=\"" << svg_num(sy(y))
          << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    svg << "<text x=\"" << svg_num(gx + 10) << "\" y=\""
        << svg_num(0.5 * (sy(gap->y_from) + sy(gap->y_to)) + 4) << "\">"
        << xml_escape(gap->label) << "</text>\n";
  }

  // legend
  double ly = kTop + 8;
  for (const auto& s : series) {
    svg << "<line x1=\"" << (kRight - 150) << "\" y1=\"" << svg_num(ly) << "\" x2=\""
        << (kRight - 120) << "\" y2=\"" << svg_num(ly) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"";
    if (s.dashed) svg << " stroke-dasharray=\"6,4\"";
    svg << "/>\n";
    svg << "<text x=\"" << (kRight - 112) << "\" y=\"" << svg_num(ly + 4) << "\">"
        << xml_escape(s.label) << "</text>\n";
    ly += 20;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace phasekit
