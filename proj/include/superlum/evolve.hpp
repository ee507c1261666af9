#pragma once

#include "superlum/density_matrix.hpp"
#include "superlum/params.hpp"

#include <vector>

namespace superlum {

inline constexpr double kDefaultTimeStep = 1e-3;

/// Trace drift above which a trajectory is rejected as non-physical.
inline constexpr double kMaxTraceDrift = 1e-6;

// Largest step accepted for these parameters:
// 1e-2 / max(gamma1 + gamma2 + R, omega_c, omega_p, |delta_p|, |delta_c|, 1).
double max_time_step(const SystemParams& params);

/// Classical fourth-order Runge-Kutta integration of the Bloch equations from
/// rho0 up to t_final (units of 1/gamma). The step is shrunk so that an
/// integer number of steps lands exactly on t_final.
DensityMatrix evolve(const SystemParams& params, const DensityMatrix& rho0,
                     double t_final, double dt = kDefaultTimeStep);

struct TrajectorySample {
  double time = 0.0;
  DensityMatrix rho;
};

// Same integration as evolve(), recording the state every `stride` steps
// (the initial and final states are always included).
std::vector<TrajectorySample> evolve_trajectory(const SystemParams& params,
                                                const DensityMatrix& rho0,
                                                double t_final, double dt,
                                                std::size_t stride);

/// Runs evolve() with dt and dt/2 and returns the finer result. Throws
/// NonPhysicalState if the two disagree by more than `tolerance` elementwise.
DensityMatrix evolve_step_checked(const SystemParams& params,
                                  const DensityMatrix& rho0, double t_final,
                                  double dt = kDefaultTimeStep,
                                  double tolerance = 1e-9);

}  // namespace superlum
