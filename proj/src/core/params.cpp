#include "superlum/params.hpp"

#include "superlum/errors.hpp"

#include <cmath>
#include <sstream>

namespace superlum {

namespace {

bool finite_all(const SystemParams& p) {
  for (double v : {p.gamma1, p.gamma2, p.pump_R, p.omega_p, p.omega_c,
                   p.delta_p, p.delta_c, p.chi_prefactor, p.nu_p_scale}) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

std::string describe_invalid(const SystemParams& p) {
  std::ostringstream os;
  if (!finite_all(p)) {
    os << "all parameters must be finite";
  } else if (!(p.gamma1 > 0.0)) {
    os << "gamma1 must be > 0 (got " << p.gamma1 << ")";
  } else if (!(p.gamma2 > 0.0)) {
    os << "gamma2 must be > 0 (got " << p.gamma2 << ")";
  } else if (p.pump_R < 0.0) {
    os << "pump_R must be >= 0 (got " << p.pump_R << ")";
  } else if (p.omega_p < 0.0) {
    os << "omega_p must be >= 0 (got " << p.omega_p << ")";
  } else if (p.omega_c < 0.0) {
    os << "omega_c must be >= 0 (got " << p.omega_c << ")";
  } else if (!(p.chi_prefactor > 0.0)) {
    os << "chi_prefactor must be > 0 (got " << p.chi_prefactor << ")";
  } else if (!(p.nu_p_scale > 0.0)) {
    os << "nu_p_scale must be > 0 (got " << p.nu_p_scale << ")";
  }
  return os.str();
}

void validate(const SystemParams& params) {
  if (auto msg = describe_invalid(params); !msg.empty()) {
    throw InvalidParameter(msg);
  }
}

}  // namespace superlum
