#include "phasekit/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "phasekit/analysis.hpp"
#include "phasekit/cli.hpp"
#include "phasekit/coding.hpp"
#include "phasekit/mc.hpp"
#include "phasekit/model.hpp"
#include "phasekit/optimize.hpp"
#include "phasekit/oracle.hpp"
#include "phasekit/report.hpp"
#include "phasekit/rng.hpp"
#include "phasekit/surface.hpp"

namespace phasekit {
namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void note(const std::string& msg) {
    if (!ok) return;  // failures own the detail line
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

CriterionResult run_criterion(int id, std::string name, double budget_seconds,
                              const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= budget_seconds) {
    c.ok = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += "over the " + format_double(budget_seconds) + "s budget";
  }
  return {id, std::move(name), c.ok, c.detail, seconds};
}

// ---------- 1, 2: training fraction optimizer ----------

void check_tau_opt_exact(Check& c) {
  const double a = std::exp(-1.0);
  const auto r = optimize_tau(validate_model(XorRandomChannel{a}), 1e-9);
  const double want_tau = std::exp(-1.0);
  const double want_r = (1.0 - std::exp(-1.0)) * (1.0 - std::exp(-1.0));
  c.expect(std::fabs(r.tau_opt - want_tau) <= 1e-6,
           "tau_opt " + format_double(r.tau_opt) + " != " + format_double(want_tau));
  c.expect(std::fabs(r.r_opt - want_r) <= 1e-9,
           "r_opt " + format_double(r.r_opt) + " != " + format_double(want_r));
  c.note("tau_opt err " + format_double(std::fabs(r.tau_opt - want_tau)));
}

void check_tau_opt_regimes(Check& c) {
  const auto mid = optimize_tau(validate_model(XorRandomChannel{1.0}), 1e-9);
  c.expect(mid.tau_opt >= 0.43 && mid.tau_opt <= 0.45,
           "tau_opt(a=1) " + format_double(mid.tau_opt) + " outside [0.43, 0.45]");

  const auto many = optimize_tau(validate_model(XorRandomChannel{1000.0}), 1e-9);
  c.expect(std::fabs(many.tau_opt - 0.5) <= 0.01,
           "tau_opt(a=1000) " + format_double(many.tau_opt) + " not near 0.5");

  const double a = 0.001;
  const auto few = optimize_tau(validate_model(XorRandomChannel{a}), 1e-9);
  const double ref = -a * std::log(a);
  c.expect(std::fabs(few.tau_opt / ref - 1.0) <= 0.05,
           "tau_opt(a=0.001) " + format_double(few.tau_opt) + " vs asymptote " +
               format_double(ref));
  c.note("tau_opt(a=1) = " + format_double(mid.tau_opt));
}

// ---------- 3: extrapolated information against the closed form ----------

void check_closed_form_mi(Check& c) {
  double worst = 0.0;
  for (double a : {0.1, std::exp(-1.0), 1.0, 10.0}) {
    const EntropySurface surface = entropy_surface(validate_model(XorRandomChannel{a}));
    for (int i = 1; i <= 9; ++i) {
      const double tau = 0.1 * i;
      const double got = one_shot_mutual_information(surface, TrainingFraction(tau)).value;
      const double want = -std::expm1(-tau / a);
      worst = std::max(worst, std::fabs(got - want));
      c.expect(std::fabs(got - want) <= 1e-6, "mi(tau=" + format_double(tau) + ", a=" +
                                                  format_double(a) + ") off by " +
                                                  format_double(got - want));
    }
  }
  c.note("worst mi error " + format_double(worst));
}

// ---------- 4: rescaling identity against the piecewise form ----------

void check_scaling_identity(Check& c) {
  // direct piecewise evaluation, sharing no code with scale_surface
  const auto piecewise = [](double a, double tau, double eps, double delta) {
    const double lo = std::min(eps, delta);
    const double base = a / tau * (-std::expm1(-(tau / a) * (1.0 + lo)));
    return eps <= delta ? base : base + (eps - delta);
  };

  SplitMix64 rng(0x70686173656b6974ULL);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double tau = 0.1 + 0.8 * rng.next_unit();
    const double a = std::exp(std::log(0.05) + std::log(20.0 / 0.05) * rng.next_unit());
    const double hi = 1.0 / tau - 1.0;
    const double eps = -1.0 + (0.001 + 0.998 * rng.next_unit()) * (hi + 1.0);
    const double delta = rng.next_unit() * hi;
    const EntropySurface surface = entropy_surface(validate_model(XorRandomChannel{a}));
    const double got = scale_surface(surface, TrainingFraction(tau), eps, delta).value;
    const double want = piecewise(a, tau, eps, delta);
    worst = std::max(worst, std::fabs(got - want));
    if (std::fabs(got - want) > 1e-12) {
      c.expect(false, "tuple (a=" + format_double(a) + ", tau=" + format_double(tau) +
                          ", eps=" + format_double(eps) + ", delta=" + format_double(delta) +
                          ") off by " + format_double(got - want));
      return;
    }
  }
  c.note("worst identity error " + format_double(worst));
}

// ---------- 5: closed form vs exhaustive enumeration, plus the chain rule ----------

void check_exact_oracle(Check& c) {
  for (std::int64_t L = 1; L <= 4; ++L) {
    for (std::int64_t T = 0; T <= 6; ++T) {
      const XorExactConfig cfg(T, std::max<std::int64_t>(T, 1), L);
      const double closed = xor_block_entropy(cfg);
      const double brute = xor_block_entropy_bruteforce(cfg);
      c.expect(closed == brute, "closed " + format_double(closed) + " != brute " +
                                    format_double(brute) + " at T=" + std::to_string(T) +
                                    " L=" + std::to_string(L));
    }
  }

  // expected distinct count must equal the accumulated per-slot unseen mass
  for (std::int64_t L : {std::int64_t{2}, std::int64_t{17}, std::int64_t{2000}}) {
    double sum = 0.0, comp = 0.0;
    for (std::int64_t t = 0; t < 1000; ++t) {
      const double y = xor_unseen_probability(t, L) - comp;
      const double next = sum + y;
      comp = (next - sum) - y;
      sum = next;
    }
    const double closed = xor_block_entropy(XorExactConfig(1000, 1000, L));
    const double err = std::fabs(closed - sum) / std::max(1.0, std::fabs(closed));
    c.expect(err <= 1e-12,
             "chain rule off by " + format_double(err) + " at L=" + std::to_string(L));
  }
}

// ---------- 6: finite blocks approach the limit from above ----------

void check_finite_size(Check& c) {
  double prev = 2.0;
  double last = 0.0;
  for (std::int64_t T : {std::int64_t{100}, std::int64_t{1000}, std::int64_t{10000},
                         std::int64_t{100000}}) {
    const double mi = xor_finite_mutual_information(XorExactConfig::from_rates(T, 0.5, 1.0));
    c.expect(mi < prev, "mi not decreasing at T=" + std::to_string(T));
    prev = mi;
    last = mi;
  }
  const double limit = -std::expm1(-0.5);
  c.expect(std::fabs(last - limit) <= 1e-4,
           "mi(T=1e5) " + format_double(last) + " vs limit " + format_double(limit));
  c.note("gap at T=1e5 is " + format_double(last - limit));
}

// ---------- 7: seeded estimators against exact values ----------

void check_mc_calibration(Check& c) {
  const auto within = [&](const char* label, const Estimate& est, double exact) {
    c.expect(std::fabs(est.mean - exact) <= est.ci_half_width,
             std::string(label) + " " + format_double(est.mean) + " misses exact " +
                 format_double(exact) + " (ci " + format_double(est.ci_half_width) + ")");
  };

  SimConfig small;
  small.training_len = 2;
  small.trials = 100000;
  const std::int64_t Ls = small.channels();  // B = 4, L = 4
  within("small unseen", estimate_unseen_probability(small, 2), xor_unseen_probability(2, Ls));
  within("small distinct", estimate_distinct_channels(small, 2),
         xor_block_entropy(XorExactConfig(2, small.block_len(), Ls)));
  within("small mi", estimate_data_phase_mi(small),
         xor_finite_mutual_information(XorExactConfig(2, small.block_len(), Ls)));

  SimConfig big;
  big.training_len = 1000;
  big.trials = 100000;
  const std::int64_t Lb = big.channels();  // B = 2000, L = 2000
  within("big unseen", estimate_unseen_probability(big, 1000),
         xor_unseen_probability(1000, Lb));
  within("big distinct", estimate_distinct_channels(big, 1000),
         xor_block_entropy(XorExactConfig(1000, big.block_len(), Lb)));
  within("big mi", estimate_data_phase_mi(big),
         xor_finite_mutual_information(XorExactConfig(1000, big.block_len(), Lb)));
}

// ---------- 8: block error rate crosses the rate threshold ----------

void check_coding_threshold(Check& c) {
  std::vector<double> pes;
  for (double rate : {0.16, 0.20, 0.24}) {
    CodingConfig cfg;
    cfg.block_len = 1000;
    cfg.tau = 0.443;
    cfg.a = 1.0;
    cfg.n_blocks = 20;
    cfg.rate = rate;
    cfg.trials = 50;
    cfg.seed = 0;
    pes.push_back(run_coding_experiment(cfg).empirical_pe);
  }
  c.expect(pes[0] <= 0.1, "pe(0.16) = " + format_double(pes[0]) + " > 0.1");
  c.expect(pes[2] >= 0.9, "pe(0.24) = " + format_double(pes[2]) + " < 0.9");
  c.expect(pes[0] <= pes[1] && pes[1] <= pes[2],
           "pe not monotone: " + format_double(pes[0]) + ", " + format_double(pes[1]) + ", " +
               format_double(pes[2]));
  c.note("pe = " + format_double(pes[0]) + " / " + format_double(pes[1]) + " / " +
         format_double(pes[2]));
}

// ---------- 9: windowed averages and integral residuals ----------

void check_integral_residuals(Check& c) {
  const std::int64_t T = 1000;
  const TrainingFraction tau(0.5);
  const std::int64_t B = blocklength(T, tau);

  const ValidatedModel osc = validate_model(Oscillation{});
  std::vector<std::pair<std::int64_t, double>> entries;
  entries.reserve(static_cast<std::size_t>(B));
  for (std::int64_t t = 0; t < B; ++t) entries.emplace_back(t, pedagogical_entropy(osc, t, T));
  const double averaged = averaged_h_prime(entries, T, 0.5, 0.1);
  c.expect(averaged == 0.5, "oscillation window average " + format_double(averaged) + " != 0.5");

  const ValidatedModel spike = validate_model(UnboundedSpike{});
  const double spike_residual =
      integral_consistency(entropy_surface(spike), tau, 0.0, Regime::data);
  c.expect(std::fabs(spike_residual - 1.0) <= 1e-9,
           "spike residual " + format_double(spike_residual) + " != 1");

  const EntropySurface rep = entropy_surface(validate_model(Repetition{}));
  double worst = 0.0;
  for (double eps : {-0.9, -0.5, -0.25, 0.0, 0.3, 0.7, 1.0}) {
    const double r = integral_consistency(rep, tau, eps, Regime::data);
    worst = std::max(worst, r);
    c.expect(r < 1e-9,
             "repetition residual " + format_double(r) + " at eps " + format_double(eps));
  }
  c.note("worst repetition residual " + format_double(worst));
}

// ---------- 10: byte-identical reruns of every command ----------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void run_all_commands(const std::filesystem::path& dir, Check& c) {
  std::filesystem::create_directories(dir);
  const auto path = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", "--model", "xor", "--a", "1", "--tau", "0.5", "--eps", "-0.5:0.9:25", "--out",
       path("a.csv"), "--json", path("a.json"), "--svg", path("a.svg")},
      {"optimize", "--a", "0.5,1", "--out", path("o.csv")},
      {"simulate", "--T", "4", "--trials", "2000", "--seed", "7", "--out", path("s.csv")},
      {"code", "--B", "120", "--tau", "0.4", "--rates", "0.2,0.5", "--blocks", "3", "--trials",
       "6", "--seed", "3", "--out", path("c.csv")},
      {"examples", "--which", "3", "--T", "50", "--out", path("e.csv"), "--json",
       path("e.json")},
  };
  for (const auto& argv : commands) {
    const int rc = cli::run(argv);
    c.expect(rc == 0, argv[0] + " exited with " + std::to_string(rc));
  }
}

void check_reproducibility(Check& c) {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "phasekit-selftest";
  std::error_code ec;
  fs::remove_all(root, ec);

  run_all_commands(root / "r1", c);
  run_all_commands(root / "r2", c);
  if (!c.ok) return;

  const std::vector<std::string> files = {
      "a.csv", "a.csv.manifest.json", "a.json", "a.svg",
      "o.csv", "o.csv.manifest.json",
      "s.csv", "s.csv.manifest.json",
      "c.csv", "c.csv.manifest.json",
      "e.csv", "e.csv.manifest.json", "e.json",
  };
  for (const auto& f : files) {
    const std::string first = slurp(root / "r1" / f);
    const std::string second = slurp(root / "r2" / f);
    c.expect(!first.empty(), f + " is empty or missing");
    c.expect(first == second, f + " differs between identical runs");
  }
  fs::remove_all(root, ec);
  c.note(std::to_string(files.size()) + " outputs byte-identical");
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
  std::vector<CriterionResult> out;
  out.push_back(run_criterion(1, "tau_opt exact case", 1.0, check_tau_opt_exact));
  out.push_back(run_criterion(2, "tau_opt regimes", 5.0, check_tau_opt_regimes));
  out.push_back(run_criterion(3, "closed form mutual information", 1.0, check_closed_form_mi));
  out.push_back(run_criterion(4, "scaling identity", 1.0, check_scaling_identity));
  out.push_back(run_criterion(5, "exact oracle equivalence", 10.0, check_exact_oracle));
  out.push_back(run_criterion(6, "finite size convergence", 1.0, check_finite_size));
  out.push_back(run_criterion(7, "monte carlo calibration", 30.0, check_mc_calibration));
  out.push_back(run_criterion(8, "coding threshold", 60.0, check_coding_threshold));
  out.push_back(run_criterion(9, "integral residuals", 1.0, check_integral_residuals));
  out.push_back(run_criterion(10, "reproducibility", 60.0, check_reproducibility));
  return out;
}

}  // namespace phasekit
