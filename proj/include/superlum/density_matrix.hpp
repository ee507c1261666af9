#pragma once

#include <Eigen/Dense>

#include <complex>

namespace superlum {

using Complex = std::complex<double>;

/// Storage order of the nine density-matrix components in a state vector.
///
/// vec(rho) = (rho11, rho22, rho33, rho21, rho12, rho31, rho13, rho32, rho23)
enum Component : int {
  k11 = 0,
  k22 = 1,
  k33 = 2,
  k21 = 3,
  k12 = 4,
  k31 = 5,
  k13 = 6,
  k32 = 7,
  k23 = 8,
};

inline constexpr int kStateSize = 9;

using StateVector = Eigen::Matrix<Complex, kStateSize, 1>;

// Component index of rho_ij, with levels numbered 1..3.
int component_index(int i, int j);

/// 3x3 density matrix of the atom. Levels are addressed 1-based, so
/// rho(3, 1) is the probe coherence rho_31.
class DensityMatrix {
 public:
  DensityMatrix() : m_(Eigen::Matrix3cd::Zero()) {}
  explicit DensityMatrix(const Eigen::Matrix3cd& m) : m_(m) {}

  static DensityMatrix pure_state(int level);
  static DensityMatrix from_vector(const StateVector& v);

  StateVector to_vector() const;

  Complex operator()(int i, int j) const { return m_(i - 1, j - 1); }
  Complex& operator()(int i, int j) { return m_(i - 1, j - 1); }

  Complex trace() const { return m_.trace(); }
  const Eigen::Matrix3cd& matrix() const { return m_; }

  // Largest elementwise modulus of (this - other).
  double max_abs_diff(const DensityMatrix& other) const;

 private:
  Eigen::Matrix3cd m_;
};

/// Outcome of checking a matrix against the density-matrix invariants.
struct DensityDiagnostics {
  double hermiticity_defect = 0.0;  ///< max |rho_ij - conj(rho_ji)|
  double trace_defect = 0.0;        ///< |trace - 1|
  double min_population = 0.0;      ///< smallest Re rho_ii
  double max_population = 0.0;      ///< largest Re rho_ii
  double min_eigenvalue = 0.0;      ///< of the Hermitian part
  bool passed = false;
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPopulationTolerance = 1e-9;
inline constexpr double kEigenvalueTolerance = 1e-9;

DensityDiagnostics validate_density_matrix(const DensityMatrix& rho);

}  // namespace superlum
