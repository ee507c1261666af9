#include "superlum/density_matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace superlum {

namespace {

// (row, col) of each Component, 0-based.
constexpr std::array<std::pair<int, int>, kStateSize> kLayout = {{
    {0, 0}, {1, 1}, {2, 2}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2},
}};

}  // namespace

int component_index(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) {
    throw std::out_of_range("density matrix levels are numbered 1..3");
  }
  for (int k = 0; k < kStateSize; ++k) {
    if (kLayout[k].first == i - 1 && kLayout[k].second == j - 1) return k;
  }
  return -1;  // unreachable
}

DensityMatrix DensityMatrix::pure_state(int level) {
  if (level < 1 || level > 3) {
    throw std::out_of_range("density matrix levels are numbered 1..3");
  }
  DensityMatrix rho;
  rho(level, level) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::from_vector(const StateVector& v) {
  Eigen::Matrix3cd m;
  for (int k = 0; k < kStateSize; ++k) {
    m(kLayout[k].first, kLayout[k].second) = v(k);
  }
  return DensityMatrix(m);
}

StateVector DensityMatrix::to_vector() const {
  StateVector v;
  for (int k = 0; k < kStateSize; ++k) {
    v(k) = m_(kLayout[k].first, kLayout[k].second);
  }
  return v;
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

DensityDiagnostics validate_density_matrix(const DensityMatrix& rho) {
  const Eigen::Matrix3cd& m = rho.matrix();
  DensityDiagnostics d;
  d.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  const Eigen::Vector3d pops = m.diagonal().real();
  d.min_population = pops.minCoeff();
  d.max_population = pops.maxCoeff();

  const Eigen::Matrix3cd hermitian_part = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> eig(hermitian_part,
                                                      Eigen::EigenvaluesOnly);
  d.min_eigenvalue = eig.eigenvalues().minCoeff();

  d.passed = d.hermiticity_defect <= kHermiticityTolerance &&
             d.trace_defect <= kTraceTolerance &&
             d.min_population >= -kPopulationTolerance &&
             d.max_population <= 1.0 + kPopulationTolerance &&
             d.min_eigenvalue >= -kEigenvalueTolerance;
  return d;
}

}  // namespace superlum
