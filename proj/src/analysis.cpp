#include "phasekit/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include "phasekit/errors.hpp"
#include "phasekit/numdiff.hpp"
#include "phasekit/oracle.hpp"
#include "phasekit/quadrature.hpp"

namespace phasekit {
namespace {

constexpr std::array<double, 3> kLadder = {1e-3, 5e-4, 2.5e-4};

DiffDomain curve_domain(const EntropySurface& surface, TrainingFraction tau, Regime regime,
                        const std::vector<double>& kinks) {
  DiffDomain dom;
  dom.lo = -1.0;
  dom.kinks = kinks;
  if (!surface.conditioning_vacuous() && regime == Regime::diagonal) {
    dom.hi = tau.max_offset();
  }
  return dom;
}

}  // namespace

double curve_value(const EntropySurface& surface, TrainingFraction tau, double eps,
                   Regime regime) {
  if (surface.conditioning_vacuous()) return surface.eval(tau, eps);
  if (regime == Regime::data) return scale_surface(surface, tau, eps, 0.0).value;
  return scale_surface(surface, tau, eps, eps).value;
}

std::vector<double> curve_kinks(const EntropySurface& surface, TrainingFraction /*tau*/,
                                Regime regime) {
  if (surface.conditioning_vacuous()) return surface.kinks();
  // conditioning on the training inputs switches behavior at the boundary
  if (regime == Regime::data) return {0.0};
  return {};
}

double curve_derivative(const EntropySurface& surface, TrainingFraction tau, double eps,
                        Regime regime) {
  const std::vector<double> kinks = curve_kinks(surface, tau, regime);
  const DiffDomain dom = curve_domain(surface, tau, regime, kinks);
  return differentiate([&](double e) { return curve_value(surface, tau, e, regime); }, eps,
                       dom);
}

double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw ValidationError("extrapolation needs at least two points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw ValidationError("extrapolation abscissae must be distinct");
  const double slope = sxy / sxx;
  return my - slope * mx;
}

namespace {

// Extrapolated right limit at 0+ of a derivative-valued function of eps.
template <class F>
double ladder_limit(F&& deriv_at) {
  std::array<double, kLadder.size()> ys{};
  for (std::size_t i = 0; i < kLadder.size(); ++i) ys[i] = deriv_at(kLadder[i]);
  return extrapolate_to_zero(std::span<const double>(kLadder.data(), kLadder.size()),
                             std::span<const double>(ys.data(), ys.size()));
}

MiDiagnostics finish_mi(double data_limit, double diag_limit) {
  MiDiagnostics out;
  out.data_limit = data_limit;
  out.diag_limit = diag_limit;
  out.raw = data_limit - diag_limit;
  out.suspicious = out.raw < -1e-9;
  out.value = std::max(out.raw, 0.0);
  return out;
}

}  // namespace

MiDiagnostics one_shot_mutual_information(const EntropySurface& surface, TrainingFraction tau) {
  if (surface.conditioning_vacuous()) {
    // both regimes collapse onto the same curve; the gap is identically zero
    const double limit =
        ladder_limit([&](double e) { return curve_derivative(surface, tau, e, Regime::data); });
    return finish_mi(limit, limit);
  }
  const double data_limit =
      ladder_limit([&](double e) { return curve_derivative(surface, tau, e, Regime::data); });
  const double diag_limit = ladder_limit(
      [&](double e) { return curve_derivative(surface, tau, e, Regime::diagonal); });
  return finish_mi(data_limit, diag_limit);
}

double lower_bound_rate(const EntropySurface& surface, TrainingFraction tau) {
  return (1.0 - tau.value()) * one_shot_mutual_information(surface, tau).value;
}

double mutual_information_at_offset(const EntropySurface& surface, TrainingFraction tau,
                                    double eps) {
  if (surface.conditioning_vacuous()) return 0.0;
  if (!(eps >= 0.0)) throw DomainError("offset mutual information needs eps >= 0");
  require_offset_in_block(eps, tau, "offset mutual information");

  // data side: slide the output offset past a fixed conditioning offset and
  // take the slope at zero separation
  DiffDomain x_dom;
  x_dom.lo = 0.0;
  const double data_limit = ladder_limit([&](double x) {
    return differentiate(
        [&](double xx) { return scale_surface(surface, tau, eps + xx, eps).value; }, x, x_dom);
  });
  // diagonal side: the diagonal curve is smooth away from the boundary, its
  // slope at eps is the limit directly
  const double diag_limit = curve_derivative(surface, tau, eps, Regime::diagonal);
  return finish_mi(data_limit, diag_limit).value;
}

double integral_consistency(const EntropySurface& surface, TrainingFraction tau, double eps,
                            Regime regime) {
  if (!(eps > -1.0)) throw DomainError("consistency check needs eps > -1");
  const double direct = curve_value(surface, tau, eps, regime);
  const std::vector<double> kinks = curve_kinks(surface, tau, regime);
  const double integral = integrate_adaptive_simpson(
      [&](double u) { return limiting_h_prime(surface.model(), tau.value(), u, regime); },
      -1.0, eps, kinks);
  return std::fabs(direct - integral);
}

double averaged_h_prime(std::span<const std::pair<std::int64_t, double>> per_symbol,
                        std::int64_t T, double eps, double kappa) {
  if (T < 1) throw ValidationError("training length must be >= 1");
  if (!(kappa > 0.0)) throw ValidationError("averaging window needs kappa > 0");
  const double Td = static_cast<double>(T);
  const std::int64_t lo = index_ceil((1.0 + eps - 0.5 * kappa) * Td);
  const std::int64_t hi = index_ceil((1.0 + eps + 0.5 * kappa) * Td);
  if (hi <= lo) throw ValidationError("insufficient samples for the averaging window");
  std::unordered_map<std::int64_t, double> by_slot;
  by_slot.reserve(per_symbol.size());
  for (const auto& [t, bits] : per_symbol) by_slot.emplace(t, bits);
  double sum = 0.0;
  for (std::int64_t t = lo; t < hi; ++t) {
    auto it = by_slot.find(t);
    if (it == by_slot.end()) {
      throw ValidationError("insufficient samples for the averaging window");
    }
    sum += it->second;
  }
  return sum / static_cast<double>(hi - lo);
}

PhaseCurves tabulate_phase_curves(const EntropySurface& surface, TrainingFraction tau,
                                  std::span<const double> grid) {
  PhaseCurves out;
  out.eps.assign(grid.begin(), grid.end());
  out.h_data.reserve(grid.size());
  out.h_diag.reserve(grid.size());
  out.hprime_data.reserve(grid.size());
  out.hprime_diag.reserve(grid.size());
  for (double e : grid) {
    out.h_data.push_back(curve_value(surface, tau, e, Regime::data));
    out.h_diag.push_back(curve_value(surface, tau, e, Regime::diagonal));
    for (Regime regime : {Regime::data, Regime::diagonal}) {
      double d;
      try {
        d = curve_derivative(surface, tau, e, regime);
      } catch (const NonDifferentiableError& kink) {
        d = kink.right;  // tabulated rows carry the right one-sided slope
      }
      (regime == Regime::data ? out.hprime_data : out.hprime_diag).push_back(d);
    }
  }
  out.mi = one_shot_mutual_information(surface, tau);
  return out;
}

}  // namespace phasekit
