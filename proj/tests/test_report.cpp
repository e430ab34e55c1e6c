#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "phasekit/errors.hpp"
#include "phasekit/report.hpp"

using namespace phasekit;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("numeric formatting is compact and stable") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.25) == "-2.25");
  CHECK(format_double(0.0) == "0");
  // round-trips to 12 significant digits
  const std::string s = format_double(0.26134878145880891);
  CHECK(std::fabs(std::stod(s) - 0.26134878145880891) < 1e-12);
  CHECK(format_double(12345.0) == format_double(12345.0));
}

TEST_CASE("csv rendering") {
  CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{"1", "2"}, {"3", "4"}};
  CHECK(render_csv(t) == "a,b\n1,2\n3,4\n");

  t.rows.push_back({"5"});
  CHECK_THROWS_AS(render_csv(t), ValidationError);
}

TEST_CASE("manifest timestamp follows the reproducible-build convention") {
  unsetenv("SOURCE_DATE_EPOCH");
  const RunManifest plain = make_manifest("analyze", {{"tau", "0.5"}}, 7);
  CHECK(plain.timestamp == "1970-01-01T00:00:00Z");
  CHECK(plain.tool_version == std::string(kToolVersion));

  setenv("SOURCE_DATE_EPOCH", "86400", 1);
  const RunManifest pinned = make_manifest("analyze", {}, 7);
  CHECK(pinned.timestamp == "1970-01-02T00:00:00Z");
  unsetenv("SOURCE_DATE_EPOCH");

  const auto j = manifest_json(plain);
  CHECK(j["command"] == "analyze");
  CHECK(j["seed"] == 7);
  CHECK(j["parameters"]["tau"] == "0.5");
  // stable key order for byte-level comparisons
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "parameters", "seed", "tool_version",
                                         "timestamp"});
}

TEST_CASE("files and sidecars") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "phasekit-report-test";
  fs::create_directories(dir);

  CsvTable t;
  t.header = {"x"};
  t.rows = {{"1"}};
  const RunManifest m = make_manifest("simulate", {{"T", "4"}}, 0);
  const std::string csv_path = (dir / "out.csv").string();
  write_csv_with_manifest(csv_path, t, m);

  CHECK(slurp(csv_path) == render_csv(t));
  const std::string sidecar = slurp(csv_path + ".manifest.json");
  CHECK(sidecar == manifest_json(m).dump(2) + "\n");

  CHECK_THROWS_AS(write_file((dir / "missing" / "out.csv").string(), "x"), ValidationError);
  fs::remove_all(dir);
}

TEST_CASE("svg plots are self-contained and split runs at gaps") {
  SvgSeries solid;
  solid.label = "h_data";
  solid.color = "#1f77b4";
  solid.points = {{-0.5, 0.3}, {0.0, 0.8}, {0.5, 1.3}};

  SvgSeries broken;
  broken.label = "h_diag";
  broken.color = "#d62728";
  broken.dashed = true;
  broken.points = {{-0.5, 0.3},
                   {0.0, std::numeric_limits<double>::quiet_NaN()},
                   {0.5, 1.1}};

  SvgGapMark gap{0.0, 0.5, 0.9, "gap = 0.4 bits"};
  const RunManifest m = make_manifest("analyze", {}, 0);
  const std::string svg =
      render_svg_curves("curves & marks", "eps", "bits", {solid, broken}, {0.0}, gap, m);

  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("manifest") != std::string::npos);
  CHECK(svg.find("curves &amp; marks") != std::string::npos);  // escaped title
  CHECK(svg.find("h_data") != std::string::npos);
  CHECK(svg.find("gap = 0.4 bits") != std::string::npos);
  // the NaN splits the dashed series into two runs of one point each; only
  // runs with two or more points draw a polyline, so: 1 solid + 0 broken,
  // but single points still get markers; at minimum the solid polyline shows
  CHECK(count_occurrences(svg, "<polyline") >= 1);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // kink marker or dashed series

  // identical inputs give identical bytes
  CHECK(svg == render_svg_curves("curves & marks", "eps", "bits", {solid, broken}, {0.0}, gap,
                                 m));
}
