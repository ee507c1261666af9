#include "superlum/analytic.hpp"

#include "superlum/errors.hpp"

#include <cmath>

namespace superlum::analytic {

namespace {

// Rates rescaled so that gamma1 = gamma2 = 1.
struct Reduced {
  double R, wp, wc, dp, g;
};

Reduced reduce(const SystemParams& p) {
  validate(p);
  if (p.delta_c != 0.0) {
    throw DomainError("weak-probe formula requires delta_c = 0");
  }
  if (p.gamma1 != p.gamma2) {
    throw DomainError("weak-probe formula requires gamma1 = gamma2");
  }
  const double g = p.gamma1;
  return {p.pump_R / g, p.omega_p / g, p.omega_c / g, p.delta_p / g, g};
}

}  // namespace

Complex rho31_weak_probe(const SystemParams& params) {
  const auto [R, wp, wc, dp, g] = reduce(params);
  const Complex I(0.0, 1.0);
  const double wc2 = wc * wc;

  const Complex numerator = 4.0 * wc2 * wp * (2.0 * dp * (1.0 - R) - I * R * R);
  const double population_factor = R + 2.0 * wc2 * (1.0 + 2.0 * R);
  const Complex line_factor = 4.0 * wc2 + R * R + 2.0 * R * (1.0 - 2.0 * I * dp) -
                              4.0 * dp * (I + dp);
  const Complex denominator = population_factor * line_factor;
  if (denominator == Complex(0.0, 0.0)) {
    throw DivisionByZero("weak-probe denominator vanishes (R = 0 and omega_c = 0?)");
  }
  return numerator / denominator;
}

double slope_coefficient(const SystemParams& params) {
  const auto [R, wp, wc, dp, g] = reduce(params);
  const double wc2 = wc * wc;
  const double population_factor = R + 2.0 * wc2 * (1.0 + 2.0 * R);
  const double line_factor = 4.0 * wc2 + R * R + 2.0 * R;
  if (!(population_factor > 0.0) || line_factor == 0.0) {
    throw DivisionByZero("slope coefficient undefined for R = 0 and omega_c = 0");
  }
  const double bracket = R * R * R + R * R + 2.0 * R + 4.0 * wc2 * (1.0 - R);
  // d/d(delta_p) in physical units picks up a 1/g from the rescaled detuning.
  return 8.0 * wc2 * wp * bracket /
         (population_factor * line_factor * line_factor) / g;
}

Complex eit_susceptibility(const SystemParams& params) {
  validate(params);
  if (params.pump_R != 0.0) {
    throw DomainError("EIT limit requires pump_R = 0");
  }
  const auto [R, wp, wc, dp, g] = reduce(params);
  const Complex denominator(wc * wc - dp * dp, -dp);
  if (denominator == Complex(0.0, 0.0)) {
    throw DivisionByZero("EIT susceptibility undefined for omega_c = 0 at delta_p = 0");
  }
  return params.chi_prefactor * wp * dp / denominator;
}

std::array<DressedState, 2> dressed_states(double omega_c) {
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
    throw DomainError("dressed states require omega_c > 0");
  }
  const double a = 1.0 / std::sqrt(2.0);
  return {{
      {Complex(a, 0.0), Complex(a, 0.0), -omega_c},
      {Complex(a, 0.0), Complex(-a, 0.0), omega_c},
  }};
}

}  // namespace superlum::analytic
