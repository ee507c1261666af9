#include "superlum/steady_state.hpp"

#include "superlum/errors.hpp"

#include <cmath>
#include <sstream>

namespace superlum {

SteadyStateSolution solve_steady_state(const SystemParams& params) {
  const Liouvillian L = assemble_liouvillian(params);

  // The population rows are linearly dependent; replace rho33's row with the
  // trace condition rho11 + rho22 + rho33 = 1.
  LiouvillianMatrix bordered = L.matrix;
  bordered.row(k33).setZero();
  bordered(k33, k11) = 1.0;
  bordered(k33, k22) = 1.0;
  bordered(k33, k33) = 1.0;

  StateVector rhs = StateVector::Zero();
  rhs(k33) = 1.0;

  const Eigen::PartialPivLU<LiouvillianMatrix> lu(bordered);
  const double rcond = lu.rcond();
  if (!(rcond > 0.0) || !std::isfinite(rcond) ||
      1.0 / rcond > kMaxConditionNumber) {
    std::ostringstream os;
    os << "steady state is not unique (condition estimate "
       << (rcond > 0.0 ? 1.0 / rcond : INFINITY) << ")";
    throw SingularSystem(os.str());
  }

  const StateVector v = lu.solve(rhs);
  SteadyStateSolution out;
  out.rho = DensityMatrix::from_vector(v);
  out.condition_estimate = 1.0 / rcond;
  out.residual = L.apply(v).cwiseAbs().maxCoeff();
  if (!(out.residual <= kResidualTolerance * L.norm_inf())) {
    std::ostringstream os;
    os << "steady-state residual " << out.residual << " exceeds tolerance";
    throw SingularSystem(os.str());
  }
  return out;
}

}  // namespace superlum
