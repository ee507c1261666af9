#include "superlum/evolve.hpp"

#include "superlum/errors.hpp"
#include "superlum/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace superlum {

double max_time_step(const SystemParams& p) {
  const double scale =
      std::max({p.gamma1 + p.gamma2 + p.pump_R, p.omega_c, p.omega_p,
                std::abs(p.delta_p), std::abs(p.delta_c), 1.0});
  return 1e-2 / scale;
}

namespace {

struct StepPlan {
  std::size_t steps = 0;
  double h = 0.0;
};

StepPlan plan_steps(const SystemParams& params, double t_final, double dt) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw InvalidParameter("t_final must be finite and >= 0");
  }
  if (!(dt > 0.0)) throw InvalidParameter("dt must be > 0");
  // Small slack so that dt = max_time_step() itself is accepted.
  if (dt > max_time_step(params) * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dt = " << dt << " exceeds the stable limit " << max_time_step(params);
    throw InvalidParameter(os.str());
  }
  StepPlan plan;
  plan.steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
  plan.h = plan.steps > 0 ? t_final / static_cast<double>(plan.steps) : 0.0;
  return plan;
}

void check_physical(const StateVector& v, const StateVector& v0) {
  const Complex tr = v(k11) + v(k22) + v(k33);
  const Complex tr0 = v0(k11) + v0(k22) + v0(k33);
  if (!(std::abs(tr - tr0) <= kMaxTraceDrift)) {
    std::ostringstream os;
    os << "trace drifted by " << std::abs(tr - tr0) << "; reduce dt";
    throw NonPhysicalState(os.str());
  }
}

class Rk4 {
 public:
  explicit Rk4(const SystemParams& params)
      : L_(assemble_liouvillian(params).matrix) {}

  void step(StateVector& y, double h) const {
    k1_.noalias() = L_ * y;
    tmp_ = y + (0.5 * h) * k1_;
    k2_.noalias() = L_ * tmp_;
    tmp_ = y + (0.5 * h) * k2_;
    k3_.noalias() = L_ * tmp_;
    tmp_ = y + h * k3_;
    k4_.noalias() = L_ * tmp_;
    y += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }

 private:
  LiouvillianMatrix L_;
  mutable StateVector k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace

std::vector<TrajectorySample> evolve_trajectory(const SystemParams& params,
                                                const DensityMatrix& rho0,
                                                double t_final, double dt,
                                                std::size_t stride) {
  const StepPlan plan = plan_steps(params, t_final, dt);
  const Rk4 rk(params);
  const StateVector y0 = rho0.to_vector();
  StateVector y = y0;

  std::vector<TrajectorySample> samples;
  samples.push_back({0.0, rho0});
  // Drift is checked on a fixed cadence so long runs stay cheap.
  constexpr std::size_t kCheckEvery = 1024;
  for (std::size_t n = 1; n <= plan.steps; ++n) {
    rk.step(y, plan.h);
    if (n % kCheckEvery == 0) check_physical(y, y0);
    const bool last = n == plan.steps;
    if (last || (stride > 0 && n % stride == 0)) {
      check_physical(y, y0);
      samples.push_back({n * plan.h, DensityMatrix::from_vector(y)});
    }
  }
  return samples;
}

DensityMatrix evolve(const SystemParams& params, const DensityMatrix& rho0,
                     double t_final, double dt) {
  return evolve_trajectory(params, rho0, t_final, dt, 0).back().rho;
}

DensityMatrix evolve_step_checked(const SystemParams& params,
                                  const DensityMatrix& rho0, double t_final,
                                  double dt, double tolerance) {
  const DensityMatrix coarse = evolve(params, rho0, t_final, dt);
  const DensityMatrix fine = evolve(params, rho0, t_final, dt / 2.0);
  const double diff = coarse.max_abs_diff(fine);
  if (!(diff <= tolerance)) {
    std::ostringstream os;
    os << "step-halving check failed: |rho(dt) - rho(dt/2)| = " << diff;
    throw NonPhysicalState(os.str());
  }
  return fine;
}

}  // namespace superlum
