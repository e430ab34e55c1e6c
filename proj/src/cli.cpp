#include "phasekit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phasekit/analysis.hpp"
#include "phasekit/coding.hpp"
#include "phasekit/errors.hpp"
#include "phasekit/mc.hpp"
#include "phasekit/model.hpp"
#include "phasekit/optimize.hpp"
#include "phasekit/oracle.hpp"
#include "phasekit/report.hpp"
#include "phasekit/selftest.hpp"
#include "phasekit/surface.hpp"

namespace phasekit::cli {
namespace {

// ---------- shared plumbing ----------

std::vector<double> linspace(double lo, double hi, std::int64_t n) {
  if (n < 1) throw ValidationError("grid needs at least one point");
  if (n == 1) return {lo};
  if (!(hi >= lo)) throw ValidationError("grid needs lo <= hi");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

// "lo:hi:n" -> n evenly spaced points
std::vector<double> parse_grid(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ValidationError("grid must look like lo:hi:n");
  }
  try {
    const double lo = std::stod(spec.substr(0, c1));
    const double hi = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const std::int64_t n = std::stoll(spec.substr(c2 + 1));
    return linspace(lo, hi, n);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("grid must look like lo:hi:n");
  }
}

std::string join_doubles(const std::vector<double>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out.push_back(',');
    out += format_double(vs[i]);
  }
  return out;
}

void emit_csv(const std::string& out_path, const CsvTable& table, const RunManifest& manifest) {
  if (out_path == "-") {
    std::cout << render_csv(table);
  } else {
    write_csv_with_manifest(out_path, table, manifest);
  }
}

nlohmann::ordered_json nullable(std::optional<double> v) {
  if (v) return *v;
  return nullptr;
}

// the fixed summary shape shared by analyze and optimize
nlohmann::ordered_json summary_json(const std::string& model, std::optional<double> tau,
                                    std::optional<double> a, std::optional<double> mutual_info,
                                    std::optional<double> lower_bound_rate,
                                    std::optional<double> tau_opt, std::optional<double> r_opt,
                                    const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["model"] = model;
  j["tau"] = nullable(tau);
  j["a"] = nullable(a);
  j["mutual_info"] = nullable(mutual_info);
  j["lower_bound_rate"] = nullable(lower_bound_rate);
  j["tau_opt"] = nullable(tau_opt);
  j["r_opt"] = nullable(r_opt);
  j["manifest"] = manifest_json(manifest);
  return j;
}

ModelSpec make_model(const std::string& name, double a, double h) {
  if (name == "xor") return XorRandomChannel{a};
  if (name == "stationary") return StationaryIid{h};
  if (name == "repetition") return Repetition{};
  if (name == "oscillation") return Oscillation{};
  if (name == "spike") return UnboundedSpike{};
  throw ValidationError("unknown model: " + name);
}

// ---------- analyze ----------

struct AnalyzeOpts {
  std::string model;
  double a = 1.0;
  double h = 1.0;
  double tau = 0.5;
  std::string eps_spec;
  std::string out = "-";
  std::string json;
  std::string svg;
};

int cmd_analyze(const AnalyzeOpts& o) {
  const ValidatedModel model = validate_model(make_model(o.model, o.a, o.h));
  const EntropySurface surface = entropy_surface(model);
  const TrainingFraction tau(o.tau);

  std::vector<double> grid;
  if (o.eps_spec.empty()) {
    const double hi = model.is<XorRandomChannel>() ? std::min(1.0, tau.max_offset()) : 1.0;
    grid = linspace(-0.9, hi, 96);
  } else {
    grid = parse_grid(o.eps_spec);
  }

  const PhaseCurves curves = tabulate_phase_curves(surface, tau, grid);
  if (curves.mi.suspicious) {
    std::cerr << "warning: extrapolated information gap " << format_double(curves.mi.raw)
              << " is negative beyond tolerance; clamped to 0\n";
  }

  std::map<std::string, std::string> params{{"model", o.model}, {"tau", format_double(o.tau)}};
  if (model.is<XorRandomChannel>()) params["a"] = format_double(o.a);
  if (model.is<StationaryIid>()) params["h"] = format_double(o.h);
  params["eps"] = format_double(grid.front()) + ":" + format_double(grid.back()) + ":" +
                  std::to_string(grid.size());
  const RunManifest manifest = make_manifest("analyze", params, 0);

  CsvTable table;
  table.header = {"eps", "h_data", "h_diag", "hprime_data", "hprime_diag"};
  for (std::size_t i = 0; i < curves.eps.size(); ++i) {
    table.rows.push_back({format_double(curves.eps[i]), format_double(curves.h_data[i]),
                          format_double(curves.h_diag[i]), format_double(curves.hprime_data[i]),
                          format_double(curves.hprime_diag[i])});
  }
  emit_csv(o.out, table, manifest);

  const double lbr = (1.0 - tau.value()) * curves.mi.value;
  std::string summary_path = o.json;
  if (summary_path.empty() && o.out != "-") summary_path = o.out + ".summary.json";
  if (!summary_path.empty()) {
    const auto j = summary_json(
        model.name(), o.tau,
        model.is<XorRandomChannel>() ? std::optional<double>(o.a) : std::nullopt,
        curves.mi.value, lbr, std::nullopt, std::nullopt, manifest);
    write_file(summary_path, j.dump(2) + "\n");
  }

  if (!o.svg.empty()) {
    std::vector<SvgSeries> series(4);
    series[0] = {"h_data", "#1f77b4", false, {}};
    series[1] = {"h_diag", "#d62728", false, {}};
    series[2] = {"hprime_data", "#2ca02c", true, {}};
    series[3] = {"hprime_diag", "#9467bd", true, {}};
    for (std::size_t i = 0; i < curves.eps.size(); ++i) {
      series[0].points.emplace_back(curves.eps[i], curves.h_data[i]);
      series[1].points.emplace_back(curves.eps[i], curves.h_diag[i]);
      series[2].points.emplace_back(curves.eps[i], curves.hprime_data[i]);
      series[3].points.emplace_back(curves.eps[i], curves.hprime_diag[i]);
    }
    std::vector<double> kinks = curve_kinks(surface, tau, Regime::data);
    for (double k : curve_kinks(surface, tau, Regime::diagonal)) kinks.push_back(k);
    std::sort(kinks.begin(), kinks.end());
    kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
    std::optional<SvgGapMark> gap;
    if (curves.mi.raw > 1e-12) {
      gap = SvgGapMark{0.0, curves.mi.diag_limit, curves.mi.data_limit,
                       "gap = " + format_double(curves.mi.value) + " bits"};
    }
    write_file(o.svg, render_svg_curves("entropy phase curves (" + model.name() + ")", "eps",
                                        "bits per symbol", series, kinks, gap, manifest));
  }
  return 0;
}

// ---------- optimize ----------

struct OptimizeOpts {
  std::vector<double> a_list;
  double tol = 1e-9;
  std::string out = "-";
  std::string json;
};

int cmd_optimize(const OptimizeOpts& o) {
  if (o.a_list.empty()) throw ValidationError("at least one a is required");
  if (!o.json.empty() && o.a_list.size() != 1) {
    throw ValidationError("summary output needs a single a");
  }

  std::map<std::string, std::string> params{{"a", join_doubles(o.a_list)},
                                            {"tol", format_double(o.tol)}};
  const RunManifest manifest = make_manifest("optimize", params, 0);

  CsvTable table;
  table.header = {"a", "tau_opt", "r_opt", "i_at_opt", "asymptotic_tau_reference"};
  TauOptResult last{};
  for (double a : o.a_list) {
    const ValidatedModel model = validate_model(XorRandomChannel{a});
    const TauOptResult r = optimize_tau(model, o.tol);
    last = r;
    const auto ref = asymptotic_tau_reference(a);
    table.rows.push_back({format_double(a), format_double(r.tau_opt), format_double(r.r_opt),
                          format_double(r.i_at_opt), ref ? format_double(*ref) : ""});
  }
  emit_csv(o.out, table, manifest);

  if (!o.json.empty()) {
    const auto j = summary_json("xor", std::nullopt, o.a_list.front(), last.i_at_opt,
                                last.r_opt, last.tau_opt, last.r_opt, manifest);
    write_file(o.json, j.dump(2) + "\n");
  }
  return 0;
}

// ---------- simulate ----------

struct SimulateOpts {
  std::int64_t T = 0;
  double tau = 0.5;
  double a = 1.0;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string quantity = "all";
  std::vector<std::int64_t> t_grid;
  std::string out = "-";
};

int cmd_simulate(const SimulateOpts& o) {
  SimConfig cfg;
  cfg.training_len = o.T;
  cfg.tau = o.tau;
  cfg.a = o.a;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  validate_sim_config(cfg);
  const std::int64_t B = cfg.block_len();
  const std::int64_t L = cfg.channels();
  // T = 0 collapses the block; clamp so the exact reference stays callable
  const XorExactConfig exact_cfg(o.T, std::max<std::int64_t>(B, 1),
                                 std::max<std::int64_t>(L, 1));

  std::set<std::int64_t> grid(o.t_grid.begin(), o.t_grid.end());
  if (grid.empty()) {
    for (std::int64_t t = 1; t < B; t *= 2) grid.insert(t);
    grid.insert(0);
    if (o.T <= B) grid.insert(o.T);
    if (B >= 1) grid.insert(B - 1);
  }

  CsvTable table;
  table.header = {"t", "exact", "estimate", "ci_low", "ci_high"};
  bool breached = false;
  auto push_row = [&](std::int64_t t, double exact, const Estimate& est) {
    table.rows.push_back({std::to_string(t), format_double(exact), format_double(est.mean),
                          format_double(est.mean - est.ci_half_width),
                          format_double(est.mean + est.ci_half_width)});
    // calibration allowance: one extra sigma beyond the reported 3-sigma CI
    const double allowance = est.ci_half_width + std::max(1e-12, est.ci_half_width / 3.0);
    if (std::fabs(exact - est.mean) > allowance) breached = true;
  };

  const bool want_unseen = o.quantity == "all" || o.quantity == "unseen";
  const bool want_distinct = o.quantity == "all" || o.quantity == "distinct";
  const bool want_mi = o.quantity == "all" || o.quantity == "mi";
  if (want_unseen) {
    for (std::int64_t t : grid) {
      if (t < 0 || t >= B) continue;
      push_row(t, xor_unseen_probability(t, L), estimate_unseen_probability(cfg, t));
    }
  }
  if (want_distinct) {
    for (std::int64_t t : grid) {
      if (t < 1 || t > B) continue;
      const XorExactConfig prefix_cfg(t, std::max(B, t), L);
      push_row(t, xor_block_entropy(prefix_cfg), estimate_distinct_channels(cfg, t));
    }
  }
  if (want_mi && (o.T == 0 || o.T < B)) {
    push_row(o.T, xor_finite_mutual_information(exact_cfg), estimate_data_phase_mi(cfg));
  }
  if (table.rows.empty()) throw ValidationError("no valid slots for the requested quantity");

  std::map<std::string, std::string> params{
      {"T", std::to_string(o.T)},          {"tau", format_double(o.tau)},
      {"a", format_double(o.a)},           {"trials", std::to_string(o.trials)},
      {"quantity", o.quantity}};
  if (!o.t_grid.empty()) {
    std::string ts;
    for (std::int64_t t : grid) {
      if (!ts.empty()) ts.push_back(',');
      ts += std::to_string(t);
    }
    params["t"] = ts;
  }
  const RunManifest manifest = make_manifest("simulate", params, o.seed);
  emit_csv(o.out, table, manifest);

  if (breached) {
    std::cerr << "error: an estimate missed its exact value by more than the calibration "
                 "allowance; this points at an implementation bug\n";
    return 2;
  }
  return 0;
}

// ---------- code ----------

struct CodeOpts {
  std::int64_t B = 0;
  double tau = 0.5;
  double a = 1.0;
  std::vector<double> rates;
  std::int64_t blocks = 20;
  std::int64_t trials = 50;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int cmd_code(const CodeOpts& o) {
  if (o.rates.empty()) throw ValidationError("at least one rate is required");
  std::vector<double> rates = o.rates;
  std::sort(rates.begin(), rates.end());

  std::vector<CodingConfig> configs;
  for (double rate : rates) {
    CodingConfig cfg;
    cfg.block_len = o.B;
    cfg.tau = o.tau;
    cfg.a = o.a;
    cfg.n_blocks = o.blocks;
    cfg.rate = rate;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    validate_coding_config(cfg);  // rejects R > 1 - tau before any work
    configs.push_back(cfg);
  }

  CsvTable table;
  table.header = {"R", "trials", "errors", "pe", "capacity_estimate"};
  for (const auto& cfg : configs) {
    const CodingResult res = run_coding_experiment(cfg);
    table.rows.push_back({format_double(cfg.rate), std::to_string(res.trials),
                          std::to_string(res.errors), format_double(res.empirical_pe),
                          format_double(res.capacity_estimate)});
  }

  std::map<std::string, std::string> params{
      {"B", std::to_string(o.B)},        {"tau", format_double(o.tau)},
      {"a", format_double(o.a)},         {"rates", join_doubles(rates)},
      {"blocks", std::to_string(o.blocks)}, {"trials", std::to_string(o.trials)}};
  emit_csv(o.out, table, make_manifest("code", params, o.seed));
  return 0;
}

// ---------- examples ----------

struct ExamplesOpts {
  int which = 0;
  std::int64_t T = 1000;
  double tau = 0.5;
  double eps = 0.5;
  double kappa = 0.1;
  double h = 1.0;
  std::string out = "-";
  std::string json;
};

int cmd_examples(const ExamplesOpts& o) {
  ModelSpec spec;
  switch (o.which) {
    case 1: spec = StationaryIid{o.h}; break;
    case 2: spec = Repetition{}; break;
    case 3: spec = Oscillation{}; break;
    case 4: spec = UnboundedSpike{}; break;
    default: throw ValidationError("selector must be 1, 2, 3, or 4");
  }
  const ValidatedModel model = validate_model(spec);
  const EntropySurface surface = entropy_surface(model);
  const TrainingFraction tau(o.tau);
  if (o.T < 1) throw ValidationError("training length must be >= 1");
  const std::int64_t B = blocklength(o.T, tau);

  std::vector<std::pair<std::int64_t, double>> entries;
  entries.reserve(static_cast<std::size_t>(B));
  for (std::int64_t t = 0; t < B; ++t) {
    entries.emplace_back(t, pedagogical_entropy(model, t, o.T));
  }

  CsvTable table;
  table.header = {"t", "entropy"};
  for (const auto& [t, bits] : entries) {
    table.rows.push_back({std::to_string(t), format_double(bits)});
  }

  std::map<std::string, std::string> params{
      {"which", std::to_string(o.which)}, {"model", model.name()},
      {"T", std::to_string(o.T)},         {"tau", format_double(o.tau)},
      {"eps", format_double(o.eps)},      {"kappa", format_double(o.kappa)}};
  if (model.is<StationaryIid>()) params["h"] = format_double(o.h);
  const RunManifest manifest = make_manifest("examples", params, 0);
  emit_csv(o.out, table, manifest);

  const double surface_value = surface.eval(tau, o.eps);
  const double averaged = averaged_h_prime(entries, o.T, o.eps, o.kappa);
  const double residual = integral_consistency(surface, tau, o.eps, Regime::data);

  // probe the per-symbol entropies around (1+eps)T: the raw limit exists
  // only when they are locally constant there
  const std::int64_t t0 = index_ceil((1.0 + o.eps) * static_cast<double>(o.T));
  double probe_min = 0.0, probe_max = 0.0;
  bool first = true;
  for (std::int64_t t = std::max<std::int64_t>(t0 - 2, 0);
       t <= std::min<std::int64_t>(t0 + 2, B - 1); ++t) {
    const double v = entries[static_cast<std::size_t>(t)].second;
    probe_min = first ? v : std::min(probe_min, v);
    probe_max = first ? v : std::max(probe_max, v);
    first = false;
  }
  const bool hprime_exists = !first && probe_max - probe_min <= 1e-9;

  std::string summary_path = o.json;
  if (summary_path.empty() && o.out != "-") summary_path = o.out + ".summary.json";
  if (!summary_path.empty()) {
    nlohmann::ordered_json j;
    j["which"] = o.which;
    j["model"] = model.name();
    j["T"] = o.T;
    j["tau"] = o.tau;
    j["eps"] = o.eps;
    j["kappa"] = o.kappa;
    j["surface_value"] = surface_value;
    j["hprime_exists"] = hprime_exists;
    j["hprime"] = hprime_exists ? nlohmann::ordered_json(probe_min) : nullptr;
    j["averaged_hprime"] = averaged;
    j["residual"] = residual;
    j["manifest"] = manifest_json(manifest);
    write_file(summary_path, j.dump(2) + "\n");
  }
  return 0;
}

// ---------- selftest ----------

struct SelftestOpts {
  bool json = false;
  std::string out;
};

int cmd_selftest(const SelftestOpts& o) {
  const std::vector<CriterionResult> results = run_acceptance_suite();
  const bool all_passed =
      std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });

  if (o.json) {
    nlohmann::ordered_json j;
    j["passed"] = all_passed;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json e;
      e["id"] = r.id;
      e["name"] = r.name;
      e["passed"] = r.passed;
      e["detail"] = r.detail;
      e["seconds"] = r.seconds;
      list.push_back(e);
    }
    j["criteria"] = list;
    j["manifest"] = manifest_json(make_manifest("selftest", {{"json", "true"}}, 0));
    const std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
      std::cout << text;
    } else {
      write_file(o.out, text);
    }
  } else {
    for (const auto& r : results) {
      char secs[32];
      std::snprintf(secs, sizeof(secs), "%.2f", r.seconds);
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  ("
                << secs << "s)";
      if (!r.detail.empty()) std::cout << "  " << r.detail;
      std::cout << "\n";
    }
    std::cout << (all_passed ? "all criteria passed" : "some criteria FAILED") << "\n";
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"one-shot training analysis via entropy phase transitions"};
  app.name("phasekit");
  app.require_subcommand(1);

  AnalyzeOpts ao;
  auto* c_analyze = app.add_subcommand("analyze", "tabulate entropy curves and derivatives");
  c_analyze->add_option("--model", ao.model, "xor, stationary, repetition, oscillation, spike")
      ->required()
      ->check(CLI::IsMember({"xor", "stationary", "repetition", "oscillation", "spike"}));
  c_analyze->add_option("--a", ao.a, "channels per transmission (xor)");
  c_analyze->add_option("--entropy-rate", ao.h, "entropy rate (stationary)");
  c_analyze->add_option("--tau", ao.tau, "training fraction in (0, 1]");
  c_analyze->add_option("--eps", ao.eps_spec, "offset grid lo:hi:n (default spans the block)");
  c_analyze->add_option("--out", ao.out, "CSV path, - for stdout");
  c_analyze->add_option("--json", ao.json, "summary path (default: <out>.summary.json)");
  c_analyze->add_option("--svg", ao.svg, "optional plot path");

  OptimizeOpts oo;
  auto* c_optimize = app.add_subcommand("optimize", "optimal training fraction per a");
  c_optimize->add_option("--a", oo.a_list, "channel densities (comma separated)")
      ->required()
      ->delimiter(',');
  c_optimize->add_option("--tol", oo.tol, "bracket width tolerance");
  c_optimize->add_option("--out", oo.out, "CSV path, - for stdout");
  c_optimize->add_option("--json", oo.json, "summary path (single a only)");

  SimulateOpts so;
  auto* c_simulate = app.add_subcommand("simulate", "exact values vs seeded estimates");
  c_simulate->add_option("--T", so.T, "training length")->required();
  c_simulate->add_option("--tau", so.tau, "training fraction in (0, 1]");
  c_simulate->add_option("--a", so.a, "channels per transmission");
  c_simulate->add_option("--trials", so.trials, "Monte Carlo trials");
  c_simulate->add_option("--seed", so.seed, "master seed");
  c_simulate->add_option("--quantity", so.quantity, "unseen, distinct, mi, or all")
      ->check(CLI::IsMember({"unseen", "distinct", "mi", "all"}));
  c_simulate->add_option("--t", so.t_grid, "slot grid (comma separated)")->delimiter(',');
  c_simulate->add_option("--out", so.out, "CSV path, - for stdout");

  CodeOpts co;
  auto* c_code = app.add_subcommand("code", "random linear codes over the induced erasures");
  c_code->add_option("--B", co.B, "block length")->required();
  c_code->add_option("--tau", co.tau, "training fraction in (0, 1)");
  c_code->add_option("--a", co.a, "channels per transmission");
  c_code->add_option("--rates", co.rates, "rates to sweep (comma separated)")
      ->required()
      ->delimiter(',');
  c_code->add_option("--blocks", co.blocks, "blocks per codeword");
  c_code->add_option("--trials", co.trials, "codewords per rate");
  c_code->add_option("--seed", co.seed, "master seed (shared across rates)");
  c_code->add_option("--out", co.out, "CSV path, - for stdout");

  ExamplesOpts eo;
  auto* c_examples = app.add_subcommand("examples", "per-symbol entropies of the toy processes");
  c_examples->add_option("--which", eo.which, "1 stationary, 2 repetition, 3 oscillation, 4 spike")
      ->required()
      ->check(CLI::Range(1, 4));
  c_examples->add_option("--T", eo.T, "training length");
  c_examples->add_option("--tau", eo.tau, "training fraction in (0, 1]");
  c_examples->add_option("--eps", eo.eps, "offset for the summary quantities");
  c_examples->add_option("--kappa", eo.kappa, "averaging window width");
  c_examples->add_option("--entropy-rate", eo.h, "entropy rate (stationary)");
  c_examples->add_option("--out", eo.out, "CSV path, - for stdout");
  c_examples->add_option("--json", eo.json, "summary path (default: <out>.summary.json)");

  SelftestOpts sto;
  auto* c_selftest = app.add_subcommand("selftest", "run the acceptance suite");
  c_selftest->add_flag("--json", sto.json, "machine-readable report");
  c_selftest->add_option("--out", sto.out, "report path (with --json)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(c_analyze)) return cmd_analyze(ao);
    if (app.got_subcommand(c_optimize)) return cmd_optimize(oo);
    if (app.got_subcommand(c_simulate)) return cmd_simulate(so);
    if (app.got_subcommand(c_code)) return cmd_code(co);
    if (app.got_subcommand(c_examples)) return cmd_examples(eo);
    if (app.got_subcommand(c_selftest)) return cmd_selftest(sto);
    std::cerr << "error: no command given\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // quadrature, differentiation, and consistency failures are runtime
    // numerical conditions, not usage mistakes
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace phasekit::cli
