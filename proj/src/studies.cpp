#include "weno/studies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "weno/scalar.hpp"

namespace weno {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// Unchecked conversions for diagnostics output: an abort dump must be able
// to serialize an inadmissible state instead of throwing again.
Prim1D raw_prim1d(const double* q) {
  const double u = q[1] / q[0];
  return {q[0], u, (gamma_default - 1.0) * (q[2] - 0.5 * q[1] * u)};
}

Prim2D raw_prim2d(const double* q) {
  const double u = q[1] / q[0];
  const double v = q[2] / q[0];
  return {q[0], u, v,
          (gamma_default - 1.0) * (q[3] - 0.5 * (q[1] * u + q[2] * v))};
}

std::string scheme_label(const SchemeConfig& cfg, const StepPolicy& policy,
                         Stepper stepper) {
  char buf[160];
  const char* eps_kind =
      cfg.epsilon.kind == EpsilonPolicy::Kind::Fixed ? "fixed" : "scaled";
  const char* pol_kind =
      policy.kind == StepPolicy::Kind::Cfl ? "cfl" : "dt-const";
  std::snprintf(buf, sizeof(buf), "scheme=%s eps=%s:%.17g p=%.17g %s=%.17g %s",
                variant_name(cfg.variant), eps_kind, cfg.epsilon.value, cfg.p,
                pol_kind, policy.value,
                stepper == Stepper::SspRk3 ? "ssp-rk3" : "rk4");
  return buf;
}

struct ScalarRunOut {
  std::vector<double> u;
  int steps = 0;
};

ScalarRunOut evolve_advection(const ProblemSpec& prob, const SchemeConfig& cfg,
                              int n, const StepPolicy& policy,
                              Stepper stepper) {
  if (!prob.scalar_init)
    throw std::invalid_argument(prob.name + " is not a scalar problem");
  const GridSpec grid(prob.x_lo, prob.x_hi, n);
  const double dx = grid.dx();
  const ReconKernel kernel(cfg, dx);
  const ScalarFn flux = [](double u) { return u; };
  const ScalarFn dflux = [](double) { return 1.0; };

  ScalarRunOut out;
  out.u.resize(n);
  for (int i = 0; i < n; ++i) out.u[i] = prob.scalar_init(grid.cell_center(i));

  ScalarField work(n);
  const RhsFn rhs = [&](const std::vector<double>& v, double,
                        std::vector<double>& r) {
    for (int i = 0; i < n; ++i) work.at(i) = v[i];
    scalar_rhs(work, kernel, dx, prob.bc, flux, dflux, r);
  };
  const auto alpha_of = [](const std::vector<double>&) { return 1.0; };

  out.steps = integrate(out.u, prob.t_end, policy, dx, alpha_of, rhs, stepper)
                  .steps;
  return out;
}

void ensure_dir(const std::string& dir) {
  if (!dir.empty()) std::filesystem::create_directories(dir);
}

}  // namespace

Norms advect_errors(const ProblemSpec& prob, const SchemeConfig& cfg, int n,
                    const StepPolicy& policy, Stepper stepper) {
  if (!prob.scalar_exact)
    throw std::invalid_argument(prob.name + " has no exact solution");
  const auto run = evolve_advection(prob, cfg, n, policy, stepper);
  const GridSpec grid(prob.x_lo, prob.x_hi, n);
  std::vector<double> exact(n);
  for (int i = 0; i < n; ++i)
    exact[i] = prob.scalar_exact(grid.cell_center(i), prob.t_end);
  return error_norms(run.u, exact);
}

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& prob,
                                              const SchemeConfig& cfg,
                                              const std::vector<int>& ns,
                                              const StepPolicy& policy,
                                              Stepper stepper) {
  std::vector<ConvergenceRow> rows;
  for (int n : ns) {
    const Norms e = advect_errors(prob, cfg, n, policy, stepper);
    ConvergenceRow row;
    row.n = n;
    row.l1_error = e.l1;
    row.linf_error = e.linf;
    if (!rows.empty()) {
      row.l1_order = deduced_order(rows.back().l1_error, e.l1);
      row.linf_order = deduced_order(rows.back().linf_error, e.linf);
    }
    rows.push_back(row);
  }
  return rows;
}

// The jump of the test function sits at x = 0.5; with node j* the last grid
// node at or left of it, the reported pair is the flux-difference derivative
// error on node j* and on node j* + 2, one stencil past the jump.
std::vector<ReconstructRow> reconstruct_study(const SchemeConfig& cfg,
                                              const std::vector<int>& ns) {
  const auto f = catalog_lookup("reconstruct-jump").scalar_init;
  // Derivative of the smooth part; the jump contributes nothing away from
  // x = 0.5 itself.
  const auto fp = [](double x) { return 3.0 * x * x - std::sin(x); };

  std::vector<ReconstructRow> rows;
  for (int n : ns) {
    const double dx = 2.0 / n;
    auto node = [dx](int j) { return -1.0 + j * dx; };

    int jstar = static_cast<int>(std::floor(1.5 / dx));
    while (node(jstar + 1) <= 0.5) ++jstar;
    while (node(jstar) > 0.5) --jstar;

    // Sampled on nodes j in [-3, jstar+5) so both interfaces of every
    // reported node have full windows.
    const int lo = -3, hi = jstar + 5;
    std::vector<double> fv(hi - lo);
    for (int j = lo; j < hi; ++j) fv[j - lo] = f(node(j));

    const ReconKernel kernel(cfg, dx);
    auto deriv_err = [&](int j) {
      const double right = kernel.reconstruct(&fv[j - 2 - lo]);
      const double left = kernel.reconstruct(&fv[j - 3 - lo]);
      return fp(node(j)) - (right - left) / dx;
    };

    ReconstructRow row;
    row.n = n;
    row.e_left = deriv_err(jstar);
    row.e_right = deriv_err(jstar + 2);
    if (!rows.empty()) {
      row.o_left = deduced_order(std::abs(rows.back().e_left),
                                 std::abs(row.e_left));
      row.o_right = deduced_order(std::abs(rows.back().e_right),
                                  std::abs(row.e_right));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<EpsilonSweepEntry> epsilon_sweep(
    const ProblemSpec& prob, Variant variant,
    const std::vector<EpsilonPolicy>& policies, double p,
    const std::vector<int>& ns, const StepPolicy& policy, Stepper stepper) {
  std::vector<EpsilonSweepEntry> out;
  for (const auto& eps : policies) {
    SchemeConfig cfg;
    cfg.variant = variant;
    cfg.epsilon = eps;
    cfg.p = p;
    out.push_back({eps, convergence_study(prob, cfg, ns, policy, stepper)});
  }
  return out;
}

std::vector<WeightsTraceRow> weights_trace(const ProblemSpec& prob,
                                           const SchemeConfig& cfg, int n) {
  if (!prob.scalar_init)
    throw std::invalid_argument(prob.name + " is not a scalar problem");
  const GridSpec grid(prob.x_lo, prob.x_hi, n);
  const double dx = grid.dx();
  ScalarField u(n);
  for (int i = 0; i < n; ++i) u.at(i) = prob.scalar_init(grid.cell_center(i));
  fill_ghosts(u, prob.bc);

  const ReconKernel kernel(cfg, dx);
  std::vector<WeightsTraceRow> rows(n);
  for (int i = 0; i < n; ++i) {
    const auto w = kernel.weights(&u.data[i + 1]);
    rows[i].x = grid.cell_center(i);
    rows[i].w[0] = w[0];
    rows[i].w[1] = w[1];
    rows[i].w[2] = w[2];
  }
  return rows;
}

double reference_distance(const std::vector<double>& x,
                          const std::vector<double>& rho,
                          const std::string& reference_csv) {
  const CsvTable ref = read_csv(reference_csv);
  std::size_t xc = ref.header.size(), rc = ref.header.size();
  for (std::size_t c = 0; c < ref.header.size(); ++c) {
    if (ref.header[c] == "x") xc = c;
    if (ref.header[c] == "rho") rc = c;
  }
  if (xc >= ref.header.size() || rc >= ref.header.size())
    throw std::runtime_error(reference_csv + " lacks x/rho columns");
  if (ref.rows.size() < 2)
    throw std::runtime_error(reference_csv + " has too few rows");

  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xq = x[i];
    std::size_t hi = 1;
    while (hi + 1 < ref.rows.size() && ref.rows[hi][xc] < xq) ++hi;
    const double x0 = ref.rows[hi - 1][xc], x1 = ref.rows[hi][xc];
    const double r0 = ref.rows[hi - 1][rc], r1 = ref.rows[hi][rc];
    const double s = std::clamp((xq - x0) / (x1 - x0), 0.0, 1.0);
    acc += std::abs(rho[i] - (r0 + s * (r1 - r0)));
  }
  return acc / static_cast<double>(x.size());
}

Run1DResult run1d(const ProblemSpec& prob, const SchemeConfig& cfg, int n,
                  const StepPolicy& policy, const std::string& out_dir,
                  const std::string& reference_csv) {
  const auto t0 = clock_type::now();
  Run1DResult res;
  res.report.problem = prob.name;
  res.report.config = scheme_label(cfg, policy, Stepper::SspRk3);
  res.report.n = n;
  res.report.t_end = prob.t_end;

  const GridSpec grid(prob.x_lo, prob.x_hi, n);
  const double dx = grid.dx();
  res.x.resize(n);
  for (int i = 0; i < n; ++i) res.x[i] = grid.cell_center(i);

  auto csv_path = [&](const char* suffix) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_%s_n%d%s.csv", prob.name.c_str(),
                  variant_name(cfg.variant), n, suffix);
    return out_dir + "/" + buf;
  };

  if (prob.kind == ProblemKind::ScalarAdvection) {
    const auto run = evolve_advection(prob, cfg, n, policy, Stepper::SspRk3);
    res.scalar_u = run.u;
    res.report.steps = run.steps;

    double m0 = 0.0, mT = 0.0, mabs = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u0 = prob.scalar_init(res.x[i]);
      m0 += u0;
      mabs += std::abs(u0);
      mT += run.u[i];
    }
    res.report.mass_change_rel = std::abs(mT - m0) / std::max(mabs, 1e-300);

    if (!out_dir.empty()) {
      ensure_dir(out_dir);
      CsvTable table;
      table.header = {"x", "u"};
      for (int i = 0; i < n; ++i)
        table.rows.push_back({res.x[i], run.u[i]});
      const std::string path = csv_path("");
      write_csv(path, table);
      res.report.outputs.push_back(path);
    }
    res.report.wall_seconds = seconds_since(t0);
    return res;
  }

  if (prob.kind != ProblemKind::Euler1D)
    throw std::invalid_argument(prob.name + " is not a 1D run");

  EulerState1D state(n * 3);
  for (int i = 0; i < n; ++i) {
    const Cons1D q = prim_to_cons(prob.euler_init(res.x[i]));
    state[3 * i] = q.rho;
    state[3 * i + 1] = q.mom;
    state[3 * i + 2] = q.ene;
  }
  double m0 = 0.0;
  for (int i = 0; i < n; ++i) m0 += state[3 * i];

  double last_t = 0.0;
  const RhsFn rhs = [&](const std::vector<double>& v, double t,
                        std::vector<double>& out) {
    last_t = t;
    euler1d_rhs(v, cfg, prob.bc, dx, out);
  };
  const auto alpha_of = [&](const std::vector<double>& v) {
    return spectral_radius_1d(v);
  };

  auto dump = [&](const char* suffix) {
    CsvTable table;
    table.header = {"x", "rho", "u", "p"};
    res.rho.resize(n);
    res.u.resize(n);
    res.p.resize(n);
    for (int i = 0; i < n; ++i) {
      const Prim1D w = raw_prim1d(&state[3 * i]);
      res.rho[i] = w.rho;
      res.u[i] = w.u;
      res.p[i] = w.p;
      table.rows.push_back({res.x[i], w.rho, w.u, w.p});
    }
    if (!out_dir.empty()) {
      ensure_dir(out_dir);
      const std::string path = csv_path(suffix);
      write_csv(path, table);
      res.report.outputs.push_back(path);
    }
  };

  try {
    res.report.steps =
        integrate(state, prob.t_end, policy, dx, alpha_of, rhs,
                  Stepper::SspRk3)
            .steps;
  } catch (const AdmissibilityError&) {
    // The stepper commits only whole steps, so the state is the last
    // admissible one; flush it stamped with the failing stage time.
    char suffix[48];
    std::snprintf(suffix, sizeof(suffix), "_abort_t%.6f", last_t);
    dump(suffix);
    throw;
  }

  dump("");
  double mT = 0.0, minr = state[0], minp = res.p.empty() ? 0.0 : res.p[0];
  for (int i = 0; i < n; ++i) {
    mT += state[3 * i];
    minr = std::min(minr, res.rho[i]);
    minp = std::min(minp, res.p[i]);
  }
  res.report.mass_change_rel = std::abs(mT - m0) / m0;
  res.report.min_density = minr;
  res.report.min_pressure = minp;

  if (prob.name == "shu-osher" && !reference_csv.empty())
    res.report.reference_distance =
        reference_distance(res.x, res.rho, reference_csv);

  res.report.wall_seconds = seconds_since(t0);
  return res;
}

Run2DResult run2d(const ProblemSpec& prob, const SchemeConfig& cfg, int nx,
                  int ny, const StepPolicy& policy,
                  const std::string& out_dir) {
  if (prob.kind != ProblemKind::Euler2D)
    throw std::invalid_argument(prob.name + " is not a 2D run");
  if (policy.kind != StepPolicy::Kind::Cfl)
    throw std::invalid_argument("2D runs use CFL stepping");

  const auto t0 = clock_type::now();
  Run2DResult res;
  res.report.problem = prob.name;
  res.report.config = scheme_label(cfg, policy, Stepper::SspRk3);
  res.report.n = nx;
  res.report.ny = ny;
  res.report.t_end = prob.t_end;
  res.grid = Grid2D(prob.x_lo, prob.x_hi, prob.y_lo, prob.y_hi, nx, ny);
  const Grid2D& grid = res.grid;
  const double dx = grid.dx(), dy = grid.dy();
  const int g = ghost_width;

  Field2D frozen(nx, ny);
  for (int i = -g; i < nx + g; ++i)
    for (int j = -g; j < ny + g; ++j) {
      const Cons2D q = prim_to_cons(prob.euler2d_init(grid.xc(i), grid.yc(j)));
      frozen(i, j, 0) = q.rho;
      frozen(i, j, 1) = q.momx;
      frozen(i, j, 2) = q.momy;
      frozen(i, j, 3) = q.ene;
    }

  GhostFiller fill;
  if (prob.name == "dmr") {
    fill = make_dmr_filler(grid);
  } else {
    Boundary2D bc;
    bc.left = bc.right = bc.bottom = bc.top = {EdgeKind::Dirichlet, {}};
    fill = make_boundary_filler(grid, bc, frozen);
  }
  Euler2DSolver solver(grid, cfg, fill);

  res.state.resize(nx * ny * 4);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int c = 0; c < 4; ++c)
        res.state[(i * ny + j) * 4 + c] = frozen(i, j, c);
  double m0 = 0.0;
  for (int i = 0; i < nx * ny; ++i) m0 += res.state[4 * i];

  double last_t = 0.0;
  const RhsFn rhs = [&](const std::vector<double>& v, double t,
                        std::vector<double>& out) {
    last_t = t;
    solver.rhs(v, t, out);
  };
  const auto alpha_of = [&](const std::vector<double>& v) {
    const auto [ax, ay] = solver.speed_bounds(v);
    return ax / dx + ay / dy;
  };

  auto dump = [&](const char* suffix) {
    if (out_dir.empty()) return;
    ensure_dir(out_dir);
    CsvTable table;
    table.header = {"x", "y", "rho", "u", "v", "p"};
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        const double* q = &res.state[(i * ny + j) * 4];
        const Prim2D w = raw_prim2d(q);
        table.rows.push_back({grid.xc(i), grid.yc(j), w.rho, w.u, w.v, w.p});
      }
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%s_%s_%dx%d%s.csv", prob.name.c_str(),
                  variant_name(cfg.variant), nx, ny, suffix);
    const std::string path = out_dir + "/" + buf;
    write_csv(path, table);
    res.report.outputs.push_back(path);
  };

  try {
    res.report.steps = integrate(res.state, prob.t_end, policy, 1.0, alpha_of,
                                 rhs, Stepper::SspRk3)
                           .steps;
  } catch (const AdmissibilityError&) {
    char suffix[48];
    std::snprintf(suffix, sizeof(suffix), "_abort_t%.6f", last_t);
    dump(suffix);
    throw;
  }

  double mT = 0.0, minr = res.state[0], minp = 1e300;
  for (int i = 0; i < nx * ny; ++i) {
    const double* q = &res.state[4 * i];
    const Prim2D w = raw_prim2d(q);
    mT += w.rho;
    minr = std::min(minr, w.rho);
    minp = std::min(minp, w.p);
  }
  res.report.mass_change_rel = std::abs(mT - m0) / m0;
  res.report.min_density = minr;
  res.report.min_pressure = minp;

  dump("");
  res.report.wall_seconds = seconds_since(t0);
  return res;
}

std::string build_reference(const std::string& out_dir) {
  const ProblemSpec& prob = catalog_lookup("shu-osher");
  const auto run =
      run1d(prob, SchemeConfig::js5(), 2000, StepPolicy::cfl(0.5), "");
  ensure_dir(out_dir);
  CsvTable table;
  table.header = {"x", "rho", "u", "p"};
  for (std::size_t i = 0; i < run.x.size(); ++i)
    table.rows.push_back({run.x[i], run.rho[i], run.u[i], run.p[i]});
  const std::string path = out_dir + "/shu_osher_reference.csv";
  write_csv(path, table);
  return path;
}

}  // namespace weno
