#pragma once

#include "superlum/density_matrix.hpp"
#include "superlum/params.hpp"

#include <string_view>

namespace superlum {

enum class Propagation { Subluminal, Superluminal, Boundary };

std::string_view to_string(Propagation p);

/// Half-width of the band around n_g - 1 = 0 that is reported as Boundary.
inline constexpr double kBoundaryBand = 1e-9;

/// Default finite-difference step in units of gamma.
inline constexpr double kDefaultSlopeStep = 1e-4;

/// Relative agreement required between the 3-point and 5-point slopes.
inline constexpr double kRichardsonTolerance = 1e-4;

Propagation classify_group_index(double group_index_minus_one);

/// Linear response of the probe at one parameter point.
struct ProbeResponse {
  double chi_re = 0.0;  ///< dispersion
  double chi_im = 0.0;  ///< absorption; negative means gain
  double slope = 0.0;   ///< d chi_re / d delta_p
  double group_index_minus_one = 0.0;
  Propagation classification = Propagation::Boundary;
  DensityMatrix rho;  ///< steady state at params.delta_p
};

Complex susceptibility(const SystemParams& params);

// Five-point central difference of chi_re with respect to delta_p, checked
// against the three-point estimate.
double dispersion_slope(const SystemParams& params,
                        double h = kDefaultSlopeStep);

// n_g - 1 = 2 pi chi' + 2 pi nu_p d chi'/d nu_p, with d/d nu_p = d/d delta_p.
double group_index(const SystemParams& params, double h = kDefaultSlopeStep);

Propagation classify_propagation(const SystemParams& params,
                                 double h = kDefaultSlopeStep);

// All of the above from a single set of five steady-state solves.
ProbeResponse probe_response(const SystemParams& params,
                             double h = kDefaultSlopeStep);

}  // namespace superlum
