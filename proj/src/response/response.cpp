#include "superlum/response.hpp"

#include "superlum/errors.hpp"
#include "superlum/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace superlum {

std::string_view to_string(Propagation p) {
  switch (p) {
    case Propagation::Subluminal: return "subluminal";
    case Propagation::Superluminal: return "superluminal";
    case Propagation::Boundary: return "boundary";
  }
  return "boundary";
}

Propagation classify_group_index(double ng_minus_one) {
  if (ng_minus_one < -kBoundaryBand) return Propagation::Superluminal;
  if (ng_minus_one > kBoundaryBand) return Propagation::Subluminal;
  return Propagation::Boundary;
}

Complex susceptibility(const SystemParams& params) {
  return params.chi_prefactor * steady_state(params)(3, 1);
}

namespace {

struct SlopeEstimate {
  double five_point = 0.0;
  double three_point = 0.0;
};

double chi_re_at(SystemParams p, double delta_p) {
  p.delta_p = delta_p;
  return susceptibility(p).real();
}

SlopeEstimate estimate_slope(const SystemParams& params, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidParameter("finite-difference step must be > 0");
  }
  const double x = params.delta_p;
  const double fp1 = chi_re_at(params, x + h);
  const double fm1 = chi_re_at(params, x - h);
  const double fp2 = chi_re_at(params, x + 2.0 * h);
  const double fm2 = chi_re_at(params, x - 2.0 * h);
  return {(-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h),
          (fp1 - fm1) / (2.0 * h)};
}

// The relative test alone is meaningless where the slope itself crosses
// zero, so the scale is floored by |chi| per unit gamma.
void check_richardson(const SlopeEstimate& s, double chi_abs) {
  const double scale = std::max(std::abs(s.five_point), chi_abs);
  const double diff = std::abs(s.five_point - s.three_point);
  if (!(diff <= kRichardsonTolerance * scale)) {
    std::ostringstream os;
    os << "finite-difference slope unstable: 5-point " << s.five_point
       << " vs 3-point " << s.three_point;
    throw DerivativeUnstable(os.str());
  }
}

double ng_minus_one(const SystemParams& p, double chi_re, double slope) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return two_pi * chi_re + two_pi * p.nu_p_scale * slope;
}

}  // namespace

ProbeResponse probe_response(const SystemParams& params, double h) {
  ProbeResponse r;
  r.rho = steady_state(params);
  const Complex chi = params.chi_prefactor * r.rho(3, 1);
  r.chi_re = chi.real();
  r.chi_im = chi.imag();

  const SlopeEstimate s = estimate_slope(params, h);
  check_richardson(s, std::abs(chi));
  r.slope = s.five_point;
  r.group_index_minus_one = ng_minus_one(params, r.chi_re, r.slope);
  r.classification = classify_group_index(r.group_index_minus_one);
  return r;
}

double dispersion_slope(const SystemParams& params, double h) {
  const SlopeEstimate s = estimate_slope(params, h);
  check_richardson(s, std::abs(susceptibility(params)));
  return s.five_point;
}

double group_index(const SystemParams& params, double h) {
  return probe_response(params, h).group_index_minus_one;
}

Propagation classify_propagation(const SystemParams& params, double h) {
  return probe_response(params, h).classification;
}

}  // namespace superlum
