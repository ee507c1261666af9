#pragma once

#include <string>

namespace superlum {

/// Physical parameters of the pumped three-level Lambda system.
///
/// Every rate and frequency is expressed in units of the reference decay
/// rate gamma (gamma = 1). Level |1> and |2> are the ground states, |3> is
/// the excited state. The probe drives |1>-|3>, the coupling field drives
/// |2>-|3>, and the incoherent pump moves population from |1> to |3> at
/// rate pump_R. Rabi frequencies are real and non-negative.
struct SystemParams {
  double gamma1 = 1.0;   ///< decay |3> -> |1>
  double gamma2 = 1.0;   ///< decay |3> -> |2>
  double pump_R = 0.0;   ///< incoherent pump rate on |1> <-> |3>
  double omega_p = 0.0;  ///< probe Rabi frequency
  double omega_c = 0.0;  ///< coupling Rabi frequency
  double delta_p = 0.0;  ///< probe detuning nu_p - omega_31
  double delta_c = 0.0;  ///< coupling detuning nu_c - omega_32
  double chi_prefactor = 1.0;  ///< K in chi = K * rho_31
  double nu_p_scale = 1.0e7;   ///< optical probe frequency in units of gamma

  bool operator==(const SystemParams&) const = default;
};

// Empty string when valid, otherwise a description of the first violation.
std::string describe_invalid(const SystemParams& params);

// Throws InvalidParameter when describe_invalid() is non-empty.
void validate(const SystemParams& params);

}  // namespace superlum
