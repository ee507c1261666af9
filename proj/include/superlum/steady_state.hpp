#pragma once

#include "superlum/density_matrix.hpp"
#include "superlum/liouvillian.hpp"
#include "superlum/params.hpp"

namespace superlum {

/// Largest acceptable condition-number estimate of the bordered system.
inline constexpr double kMaxConditionNumber = 1e12;

/// Relative residual bound: ||L vec(rho)||_inf <= kResidualTolerance ||L||_inf.
inline constexpr double kResidualTolerance = 1e-10;

struct SteadyStateSolution {
  DensityMatrix rho;
  double condition_estimate = 0.0;  ///< 1-norm estimate of the bordered matrix
  double residual = 0.0;            ///< ||L vec(rho)||_inf
};

// Unit-trace null vector of the Liouvillian. Throws SingularSystem when the
// steady state is not unique.
SteadyStateSolution solve_steady_state(const SystemParams& params);

inline DensityMatrix steady_state(const SystemParams& params) {
  return solve_steady_state(params).rho;
}

}  // namespace superlum
