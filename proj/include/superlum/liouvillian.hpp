#pragma once

#include "superlum/density_matrix.hpp"
#include "superlum/params.hpp"

namespace superlum {

using LiouvillianMatrix = Eigen::Matrix<Complex, kStateSize, kStateSize>;

/// Generator of the optical Bloch equations: d vec(rho)/dt = L vec(rho).
///
/// Rows and columns follow the Component ordering. The rho33 row is the
/// trace-conserving complement of the rho11 and rho22 rows, and the rows for
/// rho12, rho13, rho23 are the complex conjugates of rho21, rho31, rho32.
struct Liouvillian {
  LiouvillianMatrix matrix = LiouvillianMatrix::Zero();

  Complex operator()(Component row, Component col) const {
    return matrix(row, col);
  }

  StateVector apply(const StateVector& v) const { return matrix * v; }

  // Infinity norm (max absolute row sum).
  double norm_inf() const;
};

Liouvillian assemble_liouvillian(const SystemParams& params);

}  // namespace superlum
