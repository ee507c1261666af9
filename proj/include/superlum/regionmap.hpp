#pragma once

#include "superlum/params.hpp"
#include "superlum/response.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace superlum::regionmap {

enum class Method { Analytic, Numeric };

std::string_view to_string(Method m);

/// Lattice over the (pump rate, coupling Rabi frequency) plane. Both axes are
/// linearly spaced and include their end points.
struct GridSpec {
  double r_min = 0.1;
  double r_max = 6.0;
  std::size_t n_r = 60;
  double omega_min = 0.5;
  double omega_max = 4.0;
  std::size_t n_omega = 60;
};

struct Cell {
  Propagation cls = Propagation::Boundary;
  std::string error;  ///< non-empty when the cell could not be evaluated

  bool ok() const { return error.empty(); }
};

/// Cells are stored row-major: one row per omega_c sample, R varying fastest.
struct RegionGrid {
  std::vector<double> r_axis;
  std::vector<double> omega_c_axis;
  std::vector<Cell> cells;
  Method method = Method::Analytic;

  const Cell& at(std::size_t i_omega, std::size_t i_r) const {
    return cells[i_omega * r_axis.size() + i_r];
  }
};

// Probe conditions used for the numeric map: omega_p = 0.01, line center,
// resonant coupling, gamma1 = gamma2 = 1.
SystemParams default_map_params();

/// Classifies every lattice cell. Analytic: sign of the weak-probe slope
/// coefficient. Numeric: classify_propagation() of the full steady state at
/// delta_p = 0. Failing cells carry the error message instead of aborting.
RegionGrid classify_grid(const GridSpec& spec, Method method,
                         const SystemParams& base = default_map_params());

struct BoundaryPoint {
  double pump_R = 0.0;
  double omega_c = 0.0;
};

/// n samples of omega_c_necessary(R) on [r_min, r_max], which must lie in R > 1.
std::vector<BoundaryPoint> boundary_curve(double r_min, double r_max, std::size_t n);

// True when the analytic boundary passes through the box
// [R - dR, R + dR] x [omega_c - d_omega, omega_c + d_omega].
bool near_boundary(double pump_R, double omega_c, double dR, double d_omega);

struct GridComparison {
  std::size_t cells = 0;
  std::size_t interior_cells = 0;  ///< farther than one spacing from the boundary
  std::size_t interior_disagreements = 0;
  std::size_t boundary_disagreements = 0;
  std::size_t error_cells = 0;
};

GridComparison compare_grids(const RegionGrid& a, const RegionGrid& b);

/// Superluminal runs of row i_omega as (first R, last R) pairs, ascending.
std::vector<std::pair<double, double>> superluminal_runs(const RegionGrid& grid,
                                                         std::size_t i_omega);

}  // namespace superlum::regionmap
