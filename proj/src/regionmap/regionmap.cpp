#include "superlum/regionmap.hpp"

#include "superlum/analytic.hpp"
#include "superlum/errors.hpp"
#include "superlum/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace superlum::regionmap {

std::string_view to_string(Method m) {
  return m == Method::Analytic ? "analytic" : "numeric";
}

SystemParams default_map_params() {
  SystemParams p;
  p.omega_p = 0.01;
  p.delta_p = 0.0;
  p.delta_c = 0.0;
  return p;
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

void check_spec(const GridSpec& s) {
  if (s.n_r < 2 || s.n_omega < 2) {
    throw InvalidParameter("grid needs at least 2 samples per axis");
  }
  if (!(s.r_min > 0.0) || !(s.r_max > s.r_min) || !(s.omega_min > 0.0) ||
      !(s.omega_max > s.omega_min) || !std::isfinite(s.r_max) ||
      !std::isfinite(s.omega_max)) {
    throw InvalidParameter("grid ranges must be positive and ascending");
  }
}

Cell classify_cell(const SystemParams& p, Method method) {
  Cell cell;
  try {
    if (method == Method::Analytic) {
      const double s = analytic::slope_coefficient(p);
      cell.cls = s < 0.0   ? Propagation::Superluminal
                 : s > 0.0 ? Propagation::Subluminal
                           : Propagation::Boundary;
    } else {
      cell.cls = classify_propagation(p);
    }
  } catch (const Error& e) {
    cell.error = e.what();
  }
  return cell;
}

// Sign of the slope-coefficient bracket R^3 + R^2 + 2R + 4 w^2 (1 - R); the
// remaining factors of the coefficient are positive.
int bracket_sign(double R, double w) {
  const double b = R * R * R + R * R + 2.0 * R + 4.0 * w * w * (1.0 - R);
  return (b > 0.0) - (b < 0.0);
}

}  // namespace

RegionGrid classify_grid(const GridSpec& spec, Method method,
                         const SystemParams& base) {
  check_spec(spec);
  validate(base);
  RegionGrid grid;
  grid.method = method;
  grid.r_axis = linspace(spec.r_min, spec.r_max, spec.n_r);
  grid.omega_c_axis = linspace(spec.omega_min, spec.omega_max, spec.n_omega);
  grid.cells.resize(spec.n_r * spec.n_omega);

  parallel_for(grid.cells.size(), [&](std::size_t k) {
    SystemParams p = base;
    p.omega_c = grid.omega_c_axis[k / spec.n_r];
    p.pump_R = grid.r_axis[k % spec.n_r];
    grid.cells[k] = classify_cell(p, method);
  });
  return grid;
}

std::vector<BoundaryPoint> boundary_curve(double r_min, double r_max,
                                          std::size_t n) {
  if (!(r_min > 1.0) || !(r_max >= r_min) || !std::isfinite(r_max)) {
    throw DomainError("boundary curve exists only for R > 1");
  }
  if (n < 1) throw InvalidParameter("boundary curve needs at least one sample");
  std::vector<BoundaryPoint> out;
  out.reserve(n);
  const auto rs = n == 1 ? std::vector<double>{r_min} : linspace(r_min, r_max, n);
  for (double R : rs) out.push_back({R, *analytic::omega_c_necessary(R)});
  return out;
}

bool near_boundary(double pump_R, double omega_c, double dR, double d_omega) {
  constexpr int kSub = 16;
  const int ref = bracket_sign(pump_R, omega_c);
  for (int i = 0; i <= kSub; ++i) {
    const double R = pump_R - dR + 2.0 * dR * i / kSub;
    if (R <= 0.0) continue;
    for (int j = 0; j <= kSub; ++j) {
      const double w = omega_c - d_omega + 2.0 * d_omega * j / kSub;
      if (w <= 0.0) continue;
      if (bracket_sign(R, w) != ref) return true;
    }
  }
  return ref == 0;
}

GridComparison compare_grids(const RegionGrid& a, const RegionGrid& b) {
  if (a.r_axis != b.r_axis || a.omega_c_axis != b.omega_c_axis) {
    throw std::invalid_argument("grids are defined on different lattices");
  }
  const std::size_t nr = a.r_axis.size();
  const double dR = a.r_axis[1] - a.r_axis[0];
  const double dw = a.omega_c_axis[1] - a.omega_c_axis[0];

  GridComparison c;
  c.cells = a.cells.size();
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    const Cell& ca = a.cells[k];
    const Cell& cb = b.cells[k];
    if (!ca.ok() || !cb.ok()) {
      ++c.error_cells;
      continue;
    }
    const bool interior =
        !near_boundary(a.r_axis[k % nr], a.omega_c_axis[k / nr], dR, dw);
    const bool agree = ca.cls == cb.cls;
    if (interior) {
      ++c.interior_cells;
      if (!agree) ++c.interior_disagreements;
    } else if (!agree) {
      ++c.boundary_disagreements;
    }
  }
  return c;
}

std::vector<std::pair<double, double>> superluminal_runs(const RegionGrid& grid,
                                                         std::size_t i_omega) {
  std::vector<std::pair<double, double>> runs;
  const std::size_t nr = grid.r_axis.size();
  bool open = false;
  for (std::size_t i = 0; i < nr; ++i) {
    const Cell& c = grid.at(i_omega, i);
    const bool super = c.ok() && c.cls == Propagation::Superluminal;
    if (super && !open) {
      runs.emplace_back(grid.r_axis[i], grid.r_axis[i]);
      open = true;
    } else if (super) {
      runs.back().second = grid.r_axis[i];
    } else {
      open = false;
    }
  }
  return runs;
}

}  // namespace superlum::regionmap
