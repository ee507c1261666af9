// Acceptance suite: one PASS/FAIL line per primary criterion.
#include "oracles.hpp"

#include "superlum/analytic.hpp"
#include "superlum/evolve.hpp"
#include "superlum/liouvillian.hpp"
#include "superlum/regionmap.hpp"
#include "superlum/response.hpp"
#include "superlum/steady_state.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace superlum;

namespace {

// Tolerances, pinned.
constexpr double kTolCritical = 0.01;      // 1, 2
constexpr double kRStarApprox = 0.01;      // 2, "r_star ~ 1.84"
constexpr double kTolFlatSlope = 1e-6;     // 4, times omega_p
constexpr double kTolEitAbsorption = 1e-6; // 6
constexpr double kTolEitPeak = 0.01;       // 6
constexpr double kTolOracleRel = 1e-4;     // 7
constexpr double kOracleFloor = 1e-10;     // 7
constexpr double kOracleOrderGain = 50.0;  // 7
constexpr double kTolRk4 = 1e-7;           // 8
constexpr double kTolEndpoint = 0.02;      // 9
constexpr double kEpsilon = kBoundaryBand; // 9
constexpr double kLargePumpDecay = 1e-2;   // 9, |n_g-1|(1000) relative to R=20

struct Outcome {
  bool pass;
  std::string detail;
};

SystemParams fig_params(double pump_R, double omega_c, double delta_p = 0.0,
                        double omega_p = 0.01) {
  SystemParams p;
  p.pump_R = pump_R;
  p.omega_c = omega_c;
  p.omega_p = omega_p;
  p.delta_p = delta_p;
  return p;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome criterion1() {
  const auto w = analytic::omega_c_necessary(1.5);
  if (!w) return {false, "no critical coupling returned"};
  return {std::abs(*w - 2.08) <= kTolCritical,
          fmt("omega_c_necessary(1.5) = %.6f, target 2.08 +- %.2f", *w, kTolCritical)};
}

Outcome criterion2() {
  const auto m = analytic::omega_c_min();
  const bool ok = std::abs(m.omega_c_min - 1.99) <= kTolCritical &&
                  std::abs(m.r_star - 1.84) <= kRStarApprox;
  return {ok, fmt("omega_c_min = %.6f at r_star = %.6f, targets 1.99 +- %.2f and 1.84",
                  m.omega_c_min, m.r_star, kTolCritical)};
}

Outcome criterion3() {
  const double lo = dispersion_slope(fig_params(1.13, 3.0));
  const double hi = dispersion_slope(fig_params(1.15, 3.0));
  return {lo * hi < 0.0, fmt("slope(R=1.13) = %.3e, slope(R=1.15) = %.3e", lo, hi)};
}

Outcome criterion4() {
  const double omega_p = 0.01;
  const double sub = dispersion_slope(fig_params(1.5, 1.25));
  const double flat = dispersion_slope(fig_params(1.5, 2.077));
  const double super = dispersion_slope(fig_params(1.5, 3.0));
  const double exact = dispersion_slope(fig_params(1.5, *analytic::omega_c_necessary(1.5)));
  const bool ok = sub > 0.0 && std::abs(flat) <= kTolFlatSlope * omega_p && super < 0.0;
  return {ok, fmt("slope(1.25) = %.3e > 0, |slope(2.077)| = %.3e vs bound %.1e, "
                  "slope(3.0) = %.3e < 0; at the exact critical coupling slope = %.3e",
                  sub, std::abs(flat), kTolFlatSlope * omega_p, super, exact)};
}

Outcome criterion5() {
  const ProbeResponse r = probe_response(fig_params(1.5, 3.0));
  return {r.chi_im < 0.0 && r.group_index_minus_one < 0.0,
          fmt("Im chi(0) = %.3e, n_g - 1 = %.3e", r.chi_im, r.group_index_minus_one)};
}

Outcome criterion6() {
  const double at_zero = susceptibility(fig_params(0.0, 3.0)).imag();
  const double step = 0.01;
  std::vector<double> dp, y;
  for (int i = -600; i <= 600; ++i) {
    dp.push_back(i * step);
    y.push_back(susceptibility(fig_params(0.0, 3.0, i * step)).imag());
  }
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) {
      // Parabolic refinement through the three samples.
      const double den = y[i - 1] - 2.0 * y[i] + y[i + 1];
      peaks.push_back(dp[i] + 0.5 * step * (y[i - 1] - y[i + 1]) / den);
    }
  }
  const bool two = peaks.size() == 2;
  const bool ok = std::abs(at_zero) <= kTolEitAbsorption && two &&
                  std::abs(peaks[0] + 3.0) <= kTolEitPeak &&
                  std::abs(peaks[1] - 3.0) <= kTolEitPeak;
  return {ok, two ? fmt("Im chi(0) = %.3e, maxima at %.5f and %.5f", at_zero, peaks[0], peaks[1])
                  : fmt("Im chi(0) = %.3e, %zu maxima found", at_zero, peaks.size())};
}

Outcome criterion7() {
  double worst = 0.0, worst_gain = 1e300;
  bool ok = true;
  for (double R : {0.0, 0.8, 1.5, 3.0}) {
    for (double wc : {1.25, 3.0}) {
      double err3 = 0.0, err4 = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double dp = -10.0 + 0.1 * i;
        for (double wp : {1e-3, 1e-4}) {
          const Complex num = steady_state(fig_params(R, wc, dp, wp))(3, 1);
          const Complex ref = oracle::rho31_reference(wc, wp, R, dp);
          const double diff = std::abs(num - ref);
          if (diff > std::max(kTolOracleRel * std::abs(ref), kOracleFloor) && wp == 1e-3) {
            ok = false;
          }
          const double rel = diff / std::max(std::abs(ref), kOracleFloor);
          (wp == 1e-3 ? err3 : err4) = std::max(wp == 1e-3 ? err3 : err4, rel);
        }
      }
      worst = std::max(worst, err3);
      const double gain = err3 / err4;
      worst_gain = std::min(worst_gain, gain);
      if (!(gain >= kOracleOrderGain)) ok = false;
    }
  }
  return {ok, fmt("max relative error %.3e at omega_p = 1e-3; smallest error reduction %.1fx",
                  worst, worst_gain)};
}

Outcome criterion8() {
  const std::vector<std::pair<double, double>> sets = {
      {1.5, 1.25}, {1.5, 2.08}, {1.5, 3.0}, {0.8, 3.0}, {1.14, 3.0}};
  std::mt19937_64 rng(20261018);
  double worst = 0.0;
  for (const auto& [R, wc] : sets) {
    const SystemParams p = fig_params(R, wc);
    const DensityMatrix target = steady_state(p);
    const double gap = oracle::spectral_gap(assemble_liouvillian(p).matrix);
    const double t_final = 40.0 / gap;
    for (int k = 0; k < 10; ++k) {
      const DensityMatrix rho0(oracle::random_density(rng));
      const DensityMatrix rho = evolve(p, rho0, t_final, max_time_step(p));
      worst = std::max(worst, rho.max_abs_diff(target));
    }
  }
  return {worst <= kTolRk4, fmt("max elementwise deviation %.3e over 50 runs", worst)};
}

double ng_minus_one(double R, double wc) {
  return probe_response(fig_params(R, wc)).group_index_minus_one;
}

Outcome criterion9() {
  const double step = 1e-3;
  std::vector<double> Rs;
  for (int i = 0; 0.2 + i * step <= 8.0 + 1e-12; ++i) Rs.push_back(0.2 + i * step);

  double min_low = 1e300, at_low = 0.0;
  for (double R : Rs) {
    const double v = ng_minus_one(R, 1.99);
    if (v < min_low) min_low = v, at_low = R;
  }
  const bool low_ok = min_low >= -kEpsilon;

  // Sign changes at omega_c = 3, located by linear interpolation.
  std::vector<double> crossings;
  double prev = ng_minus_one(Rs[0], 3.0);
  const bool starts_positive = prev > 0.0;
  for (std::size_t i = 1; i < Rs.size(); ++i) {
    const double v = ng_minus_one(Rs[i], 3.0);
    if ((v < 0.0) != (prev < 0.0)) {
      crossings.push_back(Rs[i - 1] + step * prev / (prev - v));
    }
    prev = v;
  }
  const auto roots = analytic::pump_roots(3.0);
  const bool window_ok = starts_positive && crossings.size() == 2 && roots.size() == 2 &&
                         std::abs(crossings[0] - roots[0]) <= kTolEndpoint &&
                         std::abs(crossings[1] - roots[1]) <= kTolEndpoint;

  bool monotone = true;
  double first = 0.0, last = 0.0, before = 1e300;
  for (int i = 0; i <= 200; ++i) {
    const double R = 20.0 * std::pow(50.0, i / 200.0);
    const double a = std::abs(ng_minus_one(R, 3.0));
    if (i == 0) first = a;
    if (!(a < before)) monotone = false;
    before = last = a;
  }
  const bool tail_ok = monotone && last <= kLargePumpDecay * first;

  std::string crossing_text = "crossings:";
  for (double c : crossings) crossing_text += fmt(" %.4f", c);
  return {low_ok && window_ok && tail_ok,
          fmt("[omega_c=1.99] min(n_g-1) = %.3e at R = %.3f vs -eps = %.0e (%s); "
              "[omega_c=3] %s vs roots %.4f %.4f (%s); "
              "[R>=20] |n_g-1| %.3e -> %.3e, monotone %s (%s)",
              min_low, at_low, -kEpsilon, low_ok ? "ok" : "violated", crossing_text.c_str(),
              roots.size() > 0 ? roots[0] : 0.0, roots.size() > 1 ? roots[1] : 0.0,
              window_ok ? "ok" : "violated", first, last, monotone ? "yes" : "no",
              tail_ok ? "ok" : "violated")};
}

Outcome criterion10() {
  const regionmap::GridSpec spec;  // 60 x 60
  const SystemParams base = regionmap::default_map_params();
  const auto a = regionmap::classify_grid(spec, regionmap::Method::Analytic, base);
  const auto n = regionmap::classify_grid(spec, regionmap::Method::Numeric, base);
  const auto c = regionmap::compare_grids(a, n);
  return {c.interior_disagreements == 0 && c.error_cells == 0 && c.interior_cells > 0,
          fmt("%zux%zu grid: %zu interior cells, %zu interior disagreements, "
              "%zu near-boundary disagreements, %zu failed cells",
              spec.n_omega, spec.n_r, c.interior_cells, c.interior_disagreements,
              c.boundary_disagreements, c.error_cells)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"critical coupling at R = 1.5", criterion1},
      {"boundary minimum", criterion2},
      {"zero-slope pump rate at omega_c = 3", criterion3},
      {"slope signs at R = 1.5", criterion4},
      {"gain with superluminal group index", criterion5},
      {"EIT limit", criterion6},
      {"steady state vs weak-probe formula", criterion7},
      {"RK4 relaxation to the steady state", criterion8},
      {"group-index sign structure in R", criterion9},
      {"region map cross-validation", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu  %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
