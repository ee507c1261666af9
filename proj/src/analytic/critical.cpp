#include "superlum/analytic.hpp"

#include "superlum/errors.hpp"

#include <cmath>
#include <functional>

namespace superlum::analytic {

namespace {

// Bisection on a sign-changing bracket followed by a few Newton polishes
// that are only accepted while they stay inside the final bracket.
double refine_root(const std::function<double(double)>& f,
                   const std::function<double(double)>& df, double lo,
                   double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double d = df(x);
    if (d == 0.0) break;
    const double next = x - f(x) / d;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

double boundary_value(double R) {
  return 0.5 * std::sqrt((R * R * R + R * R + 2.0 * R) / (R - 1.0));
}

}  // namespace

std::optional<double> omega_c_necessary(double pump_R) {
  if (!(pump_R > 0.0) || !std::isfinite(pump_R)) {
    throw DomainError("omega_c_necessary requires R > 0");
  }
  if (pump_R <= 1.0) return std::nullopt;
  return boundary_value(pump_R);
}

MinimumCoupling omega_c_min() {
  // d/dR of (R^3 + R^2 + 2R)/(R - 1) vanishes where R^3 - R^2 - R - 1 = 0;
  // the cubic changes sign once on [1, 3].
  const auto f = [](double R) { return ((R - 1.0) * R - 1.0) * R - 1.0; };
  const auto df = [](double R) { return (3.0 * R - 2.0) * R - 1.0; };
  MinimumCoupling m;
  m.r_star = refine_root(f, df, 1.0, 3.0);
  m.omega_c_min = boundary_value(m.r_star);
  return m;
}

std::vector<double> pump_roots(double omega_c) {
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
    throw DomainError("pump_roots requires omega_c > 0");
  }
  const MinimumCoupling min = omega_c_min();
  const double gap = omega_c - min.omega_c_min;
  if (std::abs(gap) <= 1e-12 * min.omega_c_min) return {min.r_star};
  if (gap < 0.0) return {};

  const double w2 = 4.0 * omega_c * omega_c;
  const auto p = [w2](double R) { return ((R + 1.0) * R + 2.0 - w2) * R + w2; };
  const auto dp = [w2](double R) { return (3.0 * R + 2.0) * R + 2.0 - w2; };

  // p(R) = (R - 1) * 4 * (omega_c_necessary(R)^2 - omega_c^2) for R > 1, so
  // p < 0 at r_star, p(1) = 4, and p -> +inf as R -> inf.
  // Omega_c_necessary is monotone on each side of r_star, so each side holds
  // exactly one root.
  if (p(min.r_star) >= 0.0) return {min.r_star};  // rounding at the minimum

  double hi = 2.0 * min.r_star;
  while (p(hi) <= 0.0) hi *= 2.0;

  return {refine_root(p, dp, 1.0, min.r_star), refine_root(p, dp, min.r_star, hi)};
}

CriticalParams critical_params(double pump_R, double omega_c) {
  CriticalParams c;
  c.omega_c_necessary = omega_c_necessary(pump_R);
  const MinimumCoupling m = omega_c_min();
  c.r_star = m.r_star;
  c.omega_c_min = m.omega_c_min;
  c.r_roots = pump_roots(omega_c);
  return c;
}

}  // namespace superlum::analytic
