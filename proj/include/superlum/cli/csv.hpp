#pragma once

#include "superlum/params.hpp"
#include "superlum/response.hpp"

#include <optional>
#include <string>

namespace superlum::cli {

inline constexpr const char* kPointHeader =
    "delta_p,delta_c,omega_p,omega_c,pump_R,chi_re,chi_im,slope,ng_minus_1,"
    "class,rho11,rho22,rho33,error";
inline constexpr const char* kRegionHeader = "pump_R,omega_c,class";
inline constexpr const char* kBoundaryHeader = "pump_R,omega_c_necessary";

// 12 significant digits, '.' decimal separator, locale independent.
std::string format_number(double v);

// One point/sweep row. Without a response the numeric output columns are left
// empty and `error` carries the failure.
std::string point_row(const SystemParams& p,
                      const std::optional<ProbeResponse>& response,
                      const std::string& error);

}  // namespace superlum::cli
