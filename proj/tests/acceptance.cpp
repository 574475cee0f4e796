// Acceptance gate: one check per numbered criterion, one PASS/FAIL line
// each, process exit code equal to the number of failures. Tolerances are
// pinned here and nowhere else. Pass --full to run the 2D quadrant problem
// at its production grid instead of the CI-scale one.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "weno/euler1d.hpp"
#include "weno/euler2d.hpp"
#include "weno/norms.hpp"
#include "weno/problems.hpp"
#include "weno/stencil.hpp"
#include "weno/studies.hpp"
#include "weno/time_integration.hpp"

using namespace weno;
namespace fs = std::filesystem;

namespace {

constexpr double pi = 3.14159265358979323846;

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s  |  %s\n", ok ? "PASS" : "FAIL", idx,
              name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

// Criterion 1: smooth fifth-order convergence with errors at the expected
// magnitudes (within a factor of 3; the dt constant is not pinned).
void criterion1() {
  const std::vector<int> ns = {40, 80, 160, 320, 640};
  const std::vector<double> expected = {6.5629e-06, 2.0345e-07, 6.3302e-09,
                                        1.9741e-10, 6.1851e-12};
  const auto rows = convergence_study(
      catalog_lookup("advect-sine"), SchemeConfig::ud5(), ns,
      StepPolicy::accuracy_scaled(default_dt_scale()), Stepper::Rk4);

  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double ratio = rows[i].l1_error / expected[i];
    ok = ok && ratio < 3.0 && ratio > 1.0 / 3.0;
    if (rows[i].n >= 160) ok = ok && std::abs(rows[i].l1_order - 5.0) <= 0.2;
  }
  report(1, "smooth fifth-order convergence", ok,
         fmt("N=640: L1=%.4e (expected %.4e x3), order=%.4f (5.0 +- 0.2)",
             rows.back().l1_error, expected.back(), rows.back().l1_order));
}

// Criterion 2: full order at a critical point for both exponents, and the
// classic-weight degradation on coarse grids.
void criterion2() {
  const ProblemSpec& prob = catalog_lookup("advect-critical");
  const StepPolicy policy = StepPolicy::accuracy_scaled(default_dt_scale());

  SchemeConfig ud5_p1 = SchemeConfig::ud5();
  ud5_p1.p = 1.0;
  const double o1 =
      convergence_study(prob, ud5_p1, {320, 640}, policy, Stepper::Rk4)
          .back()
          .l1_order;
  const double o2 = convergence_study(prob, SchemeConfig::ud5(), {320, 640},
                                      policy, Stepper::Rk4)
                        .back()
                        .l1_order;
  const double oj = convergence_study(prob, SchemeConfig::js5(), {80, 160},
                                      policy, Stepper::Rk4)
                        .back()
                        .l1_order;

  const bool ok = o1 >= 4.8 && o2 >= 4.8 && oj <= 4.7;
  report(2, "critical-point convergence", ok,
         fmt("UD5 p=1/p=2 orders at N=640: %.4f/%.4f (>= 4.8), "
             "JS5 at N=160: %.4f (<= 4.7)",
             o1, o2, oj));
}

// Criterion 3: derivative-error orders next to an isolated jump, per
// scheme, against the expected order pairs at N=1600.
void criterion3() {
  struct Case {
    const char* label;
    SchemeConfig cfg;
    double o_left, o_right;
  };
  SchemeConfig loc = SchemeConfig::loc();
  loc.epsilon = EpsilonPolicy::fixed(1e-6);
  SchemeConfig ud5_p1 = SchemeConfig::ud5();
  ud5_p1.p = 1.0;
  const std::vector<Case> cases = {
      {"loc", loc, 1.9963, 2.0109},
      {"js5", SchemeConfig::js5(), 2.0004, 2.0006},
      {"ud5 p=1", ud5_p1, 1.0107, 1.1550},
      {"ud5 p=2", SchemeConfig::ud5(), 1.9911, 2.0178},
  };

  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    const auto rows = reconstruct_study(c.cfg, {800, 1600});
    const double ol = rows.back().o_left, orr = rows.back().o_right;
    ok = ok && std::abs(ol - c.o_left) <= 0.15 &&
         std::abs(orr - c.o_right) <= 0.15;
    detail += fmt("%s%s: %.4f/%.4f", detail.empty() ? "" : ", ", c.label, ol,
                  orr);
  }
  report(3, "reconstruction orders at the jump (+- 0.15)", ok, detail);
}

// Criterion 4: epsilon consistency on the cubed-sine profile. A dx^2
// epsilon keeps fifth order, dx^5 degrades it, and the local-difference
// scheme superconverges with a small fixed epsilon.
void criterion4() {
  const ProblemSpec& prob = catalog_lookup("advect-sine-cubed");
  const std::vector<int> ns = {640, 1280};
  const StepPolicy policy = StepPolicy::accuracy_scaled(default_dt_scale());

  const auto ud5 = epsilon_sweep(
      prob, Variant::Ud5, {EpsilonPolicy::scaled(2.0), EpsilonPolicy::scaled(5.0)},
      2.0, ns, policy, Stepper::Rk4);
  const double o_dx2 = ud5[0].rows.back().l1_order;
  const double o_dx5 = ud5[1].rows.back().l1_order;

  const auto loc = epsilon_sweep(prob, Variant::Loc,
                                 {EpsilonPolicy::fixed(1e-6)}, 2.0, ns,
                                 policy, Stepper::Rk4);
  const double o_loc = loc[0].rows.back().l1_order;

  const bool ok = o_dx2 >= 4.8 && std::abs(o_dx2 - 4.9999) <= 0.3 &&
                  o_dx5 <= 3.6 && std::abs(o_dx5 - 3.4685) <= 0.3 &&
                  o_loc >= 6.0 && std::abs(o_loc - 6.0690) <= 0.3;
  report(4, "epsilon consistency at N=1280", ok,
         fmt("UD5 dx^2: %.4f (~5), UD5 dx^5: %.4f (~3.47), "
             "LOC 1e-6: %.4f (~6.07)",
             o_dx2, o_dx5, o_loc));
}

// Weight of the jump-crossing substencils on a frozen step profile, around
// a jump placed off the node lattice.
double discontinuous_weight(const SchemeConfig& cfg, double dx) {
  const ReconKernel kernel(cfg, dx);
  double f[5];
  for (int m = 0; m < 5; ++m) {
    const double x = 0.2 + (m - 2.4) * dx;
    f[m] = std::sin(pi * x) + (x > 0.2 ? 1.0 : 0.0);
  }
  const auto w = kernel.weights(f);
  return w[1] + w[2];
}

double eno_slope(SchemeConfig cfg) {
  cfg.epsilon = EpsilonPolicy::fixed(1e-16);
  double first = 0.0, last = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double wd = discontinuous_weight(cfg, 0.1 / double(1 << k));
    if (k == 1) first = wd;
    last = wd;
  }
  return std::log2(first / last) / 5.0;
}

// Criterion 5: the discontinuous-stencil weight decays at the design rate
// 2p under refinement.
void criterion5() {
  SchemeConfig ud5_p1 = SchemeConfig::ud5();
  ud5_p1.p = 1.0;
  SchemeConfig loc_p1 = SchemeConfig::loc();
  loc_p1.p = 1.0;
  SchemeConfig js5_p1 = SchemeConfig::js5();
  js5_p1.p = 1.0;

  const double s_ud1 = eno_slope(ud5_p1);
  const double s_ud2 = eno_slope(SchemeConfig::ud5());
  const double s_loc = eno_slope(loc_p1);
  const double s_js = eno_slope(js5_p1);

  const bool ok = std::abs(s_ud1 - 2.0) <= 0.3 && std::abs(s_ud2 - 4.0) <= 0.3 &&
                  std::abs(s_loc - 2.0) <= 0.3 && std::abs(s_js - 2.0) <= 0.3;
  report(5, "ENO weight-decay rates (2p +- 0.3)", ok,
         fmt("UD5 p=1: %.3f (~2), UD5 p=2: %.3f (~4), LOC: %.3f (~2), "
             "JS5: %.3f (~2)",
             s_ud1, s_ud2, s_loc, s_js));
}

// Criterion 6: on smooth non-critical data the UD5(p=1) weights approach
// the linear ones at fifth order.
void criterion6() {
  SchemeConfig cfg = SchemeConfig::ud5();
  cfg.p = 1.0;
  const double x0 = 0.3;

  double first = 0.0, last = 0.0;
  for (int k = 0; k <= 5; ++k) {
    const double dx = 0.1 / double(1 << k);
    const ReconKernel kernel(cfg, dx);
    double f[5];
    for (int m = 0; m < 5; ++m) f[m] = std::sin(pi * (x0 + (m - 2) * dx));
    const auto w = kernel.weights(f);
    const double dev = std::max({std::abs(w[0] - 0.1), std::abs(w[1] - 0.6),
                                 std::abs(w[2] - 0.3)});
    if (k == 0) first = dev;
    last = dev;
  }
  const double slope = std::log2(first / last) / 5.0;
  report(6, "weight convergence rate for UD5 p=1", slope >= 4.5,
         fmt("max|w - d| slope: %.3f (>= 4.5)", slope));
}

// Criterion 7: shock-tube admissibility, feature capture against the
// fine-grid reference, and exact conservation on a periodic run.
void criterion7() {
  const StepPolicy policy = StepPolicy::cfl(0.5);

  const auto sod =
      run1d(catalog_lookup("sod"), SchemeConfig::ud5(), 200, policy, "");
  const auto lax =
      run1d(catalog_lookup("lax"), SchemeConfig::ud5(), 200, policy, "");
  const bool ok_tubes =
      sod.report.min_density > 0.0 && sod.report.min_pressure > 0.0 &&
      lax.report.min_density > 0.0 && lax.report.min_pressure > 0.0;

  const fs::path scratch = fs::temp_directory_path() / "weno-acceptance";
  fs::create_directories(scratch);
  const std::string ref = build_reference(scratch.string());
  const auto so_ud5 = run1d(catalog_lookup("shu-osher"), SchemeConfig::ud5(),
                            200, policy, "", ref);
  const auto so_js5 = run1d(catalog_lookup("shu-osher"), SchemeConfig::js5(),
                            200, policy, "", ref);
  fs::remove_all(scratch);
  const double d_ud5 = so_ud5.report.reference_distance.value();
  const double d_js5 = so_js5.report.reference_distance.value();

  const auto shapes = run1d(catalog_lookup("advect-shapes"),
                            SchemeConfig::ud5(), 200, policy, "");
  const double drift = shapes.report.mass_change_rel;

  const bool ok = ok_tubes && d_ud5 <= d_js5 && drift <= 1e-12;
  report(7, "1D Euler and conservation properties", ok,
         fmt("sod/lax min rho: %.3g/%.3g, min p: %.3g/%.3g; shock-entropy "
             "distance UD5 %.4f <= JS5 %.4f; periodic mass drift %.2e",
             sod.report.min_density, lax.report.min_density,
             sod.report.min_pressure, lax.report.min_pressure, d_ud5, d_js5,
             drift));
}

// Criterion 8a helper: largest deviation of the quadrant solution from its
// own transpose (with the velocity components swapped).
double diagonal_asymmetry(const EulerState2D& s, int n) {
  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double* a = &s[(i * n + j) * 4];
      const double* b = &s[(j * n + i) * 4];
      asym = std::max(asym, std::abs(a[0] - b[0]));
      asym = std::max(asym, std::abs(a[1] - b[2]));
      asym = std::max(asym, std::abs(a[2] - b[1]));
      asym = std::max(asym, std::abs(a[3] - b[3]));
    }
  return asym;
}

// Criterion 8b helper: a y-uniform shock tube stepped as a 2D field must
// track the 1D solver state to roundoff, step by step.
double yuniform_max_divergence() {
  const ProblemSpec& prob = catalog_lookup("sod");
  const int nx = 100, ny = 10;
  const double dx = 10.0 / nx;

  EulerState1D u1(nx * 3);
  for (int i = 0; i < nx; ++i) {
    const Cons1D q = prim_to_cons(prob.euler_init(-5.0 + (i + 0.5) * dx));
    u1[3 * i] = q.rho;
    u1[3 * i + 1] = q.mom;
    u1[3 * i + 2] = q.ene;
  }

  const Grid2D grid(-5.0, 5.0, 0.0, 1.0, nx, ny);
  Boundary2D bc;
  bc.left = bc.right = bc.bottom = bc.top = {EdgeKind::Outflow, {}};
  Euler2DSolver solver(grid, SchemeConfig::ud5(),
                       make_boundary_filler(grid, bc, Field2D(nx, ny)));
  EulerState2D u2(nx * ny * 4);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      u2[(i * ny + j) * 4 + 0] = u1[3 * i];
      u2[(i * ny + j) * 4 + 1] = u1[3 * i + 1];
      u2[(i * ny + j) * 4 + 2] = 0.0;
      u2[(i * ny + j) * 4 + 3] = u1[3 * i + 2];
    }

  const RhsFn rhs1 = [&](const std::vector<double>& v, double,
                         std::vector<double>& out) {
    euler1d_rhs(v, SchemeConfig::ud5(), BoundaryKind::ZeroGradient, dx, out);
  };
  const RhsFn rhs2 = [&](const std::vector<double>& v, double t,
                         std::vector<double>& out) { solver.rhs(v, t, out); };

  const double dt = 0.4 * dx / spectral_radius_1d(u1);
  double divergence = 0.0;
  for (int s = 0; s < 10; ++s) {
    ssp_rk3_step(u1, rhs1, s * dt, dt);
    ssp_rk3_step(u2, rhs2, s * dt, dt);
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const double* q = &u2[(i * ny + j) * 4];
        divergence = std::max(divergence, std::abs(q[0] - u1[3 * i]));
        divergence = std::max(divergence, std::abs(q[1] - u1[3 * i + 1]));
        divergence = std::max(divergence, std::abs(q[2]));
        divergence = std::max(divergence, std::abs(q[3] - u1[3 * i + 2]));
      }
  }
  return divergence;
}

void criterion8(bool full) {
  const StepPolicy policy = StepPolicy::cfl(0.5);
  const int n = full ? 400 : 100;
  const auto quad =
      run2d(catalog_lookup("riemann2d"), SchemeConfig::ud5(), n, n, policy, "");
  const double asym = diagonal_asymmetry(quad.state, n);
  const bool ok_quad = asym <= 1e-10 && quad.report.min_density > 0.0 &&
                       quad.report.min_pressure > 0.0;

  const double divergence = yuniform_max_divergence();
  const bool ok_uniform = divergence <= 1e-12;

  const auto dmr =
      run2d(catalog_lookup("dmr"), SchemeConfig::ud5(), 250, 250, policy, "");
  const bool ok_dmr =
      dmr.report.min_density > 0.0 && dmr.report.min_pressure > 0.0;

  report(8, "2D properties", ok_quad && ok_uniform && ok_dmr,
         fmt("quadrant %dx%d asymmetry %.2e (<= 1e-10), min rho/p %.3g/%.3g; "
             "y-uniform divergence %.2e (<= 1e-12); reflection min rho/p "
             "%.3g/%.3g",
             n, n, asym, quad.report.min_density, quad.report.min_pressure,
             divergence, dmr.report.min_density, dmr.report.min_pressure));
}

// Criterion 9: measured convergence slopes of the two steppers on u' = -u.
double stepper_slope(Stepper stepper) {
  const std::vector<int> ms = {4, 8, 16, 32, 64};
  const RhsFn rhs = [](const std::vector<double>& v, double,
                       std::vector<double>& out) {
    out.assign(1, -v[0]);
  };
  std::vector<double> errs;
  for (int m : ms) {
    std::vector<double> u = {1.0};
    const double dt = 1.0 / m;
    for (int s = 0; s < m; ++s) {
      if (stepper == Stepper::Rk4)
        rk4_step(u, rhs, s * dt, dt);
      else
        ssp_rk3_step(u, rhs, s * dt, dt);
    }
    errs.push_back(std::abs(u[0] - std::exp(-1.0)));
  }
  return std::log2(errs.front() / errs.back()) /
         double(errs.size() - 1);
}

void criterion9() {
  const double s3 = stepper_slope(Stepper::SspRk3);
  const double s4 = stepper_slope(Stepper::Rk4);
  const bool ok = std::abs(s3 - 3.0) <= 0.1 && std::abs(s4 - 4.0) <= 0.1;
  report(9, "stepper convergence orders", ok,
         fmt("SSP-RK3 slope %.3f (3.0 +- 0.1), RK4 slope %.3f (4.0 +- 0.1)",
             s3, s4));
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--full") == 0) full = true;

  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8(full);
  criterion9();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::printf("%d of 9 criteria failed (%.1f s%s)\n", failures, secs,
              full ? ", full scale" : "");
  return failures;
}
