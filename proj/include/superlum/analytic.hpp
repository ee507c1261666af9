#pragma once

#include "superlum/density_matrix.hpp"
#include "superlum/params.hpp"

#include <array>
#include <optional>
#include <vector>

namespace superlum::analytic {

// Closed-form results of the weak-probe (first order in omega_p) theory.
// They hold for delta_c = 0 and gamma1 = gamma2; other parameters raise
// DomainError. When gamma1 = gamma2 = g != 1 all inputs are rescaled by g.

/// Weak-probe steady-state coherence rho_31.
Complex rho31_weak_probe(const SystemParams& params);

/// Coefficient S with Re rho_31 ~= S * delta_p near delta_p = 0.
double slope_coefficient(const SystemParams& params);

/// Coupling strength at which the line-center dispersion slope changes sign,
/// 0.5 * sqrt((R^3 + R^2 + 2R) / (R - 1)). Absent for R <= 1, where the slope
/// stays positive for every omega_c.
std::optional<double> omega_c_necessary(double pump_R);

struct MinimumCoupling {
  double r_star = 0.0;       ///< root of R^3 - R^2 - R - 1
  double omega_c_min = 0.0;  ///< omega_c_necessary(r_star)
};

/// Global minimum of omega_c_necessary over R > 1.
MinimumCoupling omega_c_min();

/// Pump rates R > 1 with omega_c_necessary(R) == omega_c, i.e. the roots of
/// R^3 + R^2 + (2 - 4 omega_c^2) R + 4 omega_c^2 = 0. Ascending; empty below
/// the minimum coupling, a single r_star at it, two roots above.
std::vector<double> pump_roots(double omega_c);

struct CriticalParams {
  std::optional<double> omega_c_necessary;
  double r_star = 0.0;
  double omega_c_min = 0.0;
  std::vector<double> r_roots;
};

CriticalParams critical_params(double pump_R, double omega_c);

/// Pure EIT response (R = 0): chi_prefactor * omega_p delta_p /
/// (omega_c^2 - delta_p^2 - i delta_p).
Complex eit_susceptibility(const SystemParams& params);

struct DressedState {
  Complex amp_excited;  ///< amplitude on |3>
  Complex amp_ground2;  ///< amplitude on |2>
  double energy = 0.0;  ///< eigenvalue in units of hbar * gamma
};

/// Eigenstates |+> and |-> of the coupling-field interaction, in that order:
/// |+-> = (|3> +- |2>)/sqrt(2) with energies -+omega_c.
std::array<DressedState, 2> dressed_states(double omega_c);

}  // namespace superlum::analytic
