// Explicit steppers: SSP-RK3 for shock problems, classic RK4 for smooth
// convergence studies, plus the step-size policies they run under.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace weno {

// dt scale making dt = 0.5 dx on the coarsest convergence-table grid
// (dx = 0.2), so accuracy-scaled runs start from a familiar step size.
inline double default_dt_scale() { return 0.5 * std::pow(0.2, -0.25); }

struct StepPolicy {
  enum class Kind { Cfl, AccuracyScaled };
  Kind kind = Kind::Cfl;
  // Cfl: the CFL number in dt = number dx / alpha.
  // AccuracyScaled: the constant c in dt = c dx^{5/4}.
  double value = 0.5;

  static StepPolicy cfl(double number = 0.5) {
    if (!(number > 0.0) || number > 1.0)
      throw std::invalid_argument("CFL number must lie in (0, 1]");
    return {Kind::Cfl, number};
  }
  static StepPolicy accuracy_scaled(double c = default_dt_scale()) {
    if (!(c > 0.0)) throw std::invalid_argument("dt scale must be positive");
    return {Kind::AccuracyScaled, c};
  }
};

// Raw policy step, snapped so the final step lands exactly on t_end.
inline double compute_dt(const StepPolicy& policy, double dx, double alpha,
                         double t, double t_end) {
  double dt = policy.kind == StepPolicy::Kind::Cfl
                  ? policy.value * dx / alpha
                  : policy.value * std::pow(dx, 1.25);
  return std::min(dt, t_end - t);
}

using RhsFn =
    std::function<void(const std::vector<double>&, double, std::vector<double>&)>;

// Three-stage convex-combination update (Shu-Osher form).
inline void ssp_rk3_step(std::vector<double>& u, const RhsFn& rhs, double t,
                         double dt) {
  const std::size_t m = u.size();
  std::vector<double> k(m), u1(m), u2(m);
  rhs(u, t, k);
  for (std::size_t i = 0; i < m; ++i) u1[i] = u[i] + dt * k[i];
  rhs(u1, t + dt, k);
  for (std::size_t i = 0; i < m; ++i)
    u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * k[i]);
  rhs(u2, t + 0.5 * dt, k);
  for (std::size_t i = 0; i < m; ++i)
    u[i] = u[i] / 3.0 + (2.0 / 3.0) * (u2[i] + dt * k[i]);
}

// Classic four-stage fourth-order update.
inline void rk4_step(std::vector<double>& u, const RhsFn& rhs, double t,
                     double dt) {
  const std::size_t m = u.size();
  std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
  rhs(u, t, k1);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
  rhs(tmp, t + 0.5 * dt, k2);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
  rhs(tmp, t + 0.5 * dt, k3);
  for (std::size_t i = 0; i < m; ++i) tmp[i] = u[i] + dt * k3[i];
  rhs(tmp, t + dt, k4);
  for (std::size_t i = 0; i < m; ++i)
    u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

enum class Stepper { SspRk3, Rk4 };

struct IntegrateResult {
  int steps = 0;
  double t = 0.0;
};

// Method-of-lines driver. alpha_of supplies the current wave-speed bound
// for CFL stepping (ignored under AccuracyScaled); the loop terminates with
// accumulated time equal to t_end to within rounding.
inline IntegrateResult integrate(std::vector<double>& u, double t_end,
                                 const StepPolicy& policy, double dx,
                                 const std::function<double(const std::vector<double>&)>& alpha_of,
                                 const RhsFn& rhs, Stepper stepper) {
  IntegrateResult res;
  const double tol = 1e-13 * std::max(1.0, std::abs(t_end));
  while (t_end - res.t > tol) {
    const double alpha =
        policy.kind == StepPolicy::Kind::Cfl ? alpha_of(u) : 1.0;
    const double dt = compute_dt(policy, dx, alpha, res.t, t_end);
    if (!(dt > 0.0)) throw std::runtime_error("non-positive time step");
    if (stepper == Stepper::SspRk3)
      ssp_rk3_step(u, rhs, res.t, dt);
    else
      rk4_step(u, rhs, res.t, dt);
    res.t += dt;
    ++res.steps;
  }
  return res;
}

}  // namespace weno
