// Microbenchmarks comparing the parallel right-hand sides against their
// serial reference twins, plus the per-interface reconstruction kernels.
// Run with --benchmark_filter=... to narrow; wall times are per full sweep.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "weno/euler2d.hpp"
#include "weno/problems.hpp"
#include "weno/reference.hpp"
#include "weno/scalar.hpp"
#include "weno/stencil.hpp"

using namespace weno;

namespace {

constexpr double pi = 3.14159265358979323846;

ScalarField make_scalar_field(int n) {
  ScalarField u(n);
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + (i + 0.5) * 2.0 / n;
    u.at(i) = std::sin(pi * x) + (x > 0.3 ? 0.8 : 0.0);
  }
  return u;
}

const ScalarFn burgers = [](double v) { return 0.5 * v * v; };
const ScalarFn dburgers = [](double v) { return v; };

struct QuadrantCase {
  Grid2D grid;
  GhostFiller fill;
  EulerState2D state;

  explicit QuadrantCase(int n)
      : grid(0.0, 1.0, 0.0, 1.0, n, n), state(n * n * 4) {
    const ProblemSpec& prob = catalog_lookup("riemann2d");
    const int g = ghost_width;
    Field2D frozen(n, n);
    for (int i = -g; i < n + g; ++i)
      for (int j = -g; j < n + g; ++j) {
        const Cons2D q =
            prim_to_cons(prob.euler2d_init(grid.xc(i), grid.yc(j)));
        frozen(i, j, 0) = q.rho;
        frozen(i, j, 1) = q.momx;
        frozen(i, j, 2) = q.momy;
        frozen(i, j, 3) = q.ene;
      }
    Boundary2D bc;
    bc.left = bc.right = bc.bottom = bc.top = {EdgeKind::Dirichlet, {}};
    fill = make_boundary_filler(grid, bc, frozen);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int c = 0; c < 4; ++c)
          state[(i * n + j) * 4 + c] = frozen(i, j, c);
  }
};

void bm_scalar_rhs_parallel(benchmark::State& bench) {
  const int n = int(bench.range(0));
  const double dx = 2.0 / n;
  const ReconKernel kernel(SchemeConfig::ud5(), dx);
  ScalarField u = make_scalar_field(n);
  std::vector<double> rhs;
  for (auto _ : bench) {
    scalar_rhs(u, kernel, dx, BoundaryKind::Periodic, burgers, dburgers, rhs);
    benchmark::DoNotOptimize(rhs.data());
  }
  bench.SetItemsProcessed(bench.iterations() * n);
}

void bm_scalar_rhs_serial(benchmark::State& bench) {
  const int n = int(bench.range(0));
  const double dx = 2.0 / n;
  const ReconKernel kernel(SchemeConfig::ud5(), dx);
  ScalarField u = make_scalar_field(n);
  std::vector<double> rhs;
  for (auto _ : bench) {
    ref::scalar_rhs(u, kernel, dx, BoundaryKind::Periodic, burgers, dburgers,
                    rhs);
    benchmark::DoNotOptimize(rhs.data());
  }
  bench.SetItemsProcessed(bench.iterations() * n);
}

void bm_euler2d_rhs_parallel(benchmark::State& bench) {
  const int n = int(bench.range(0));
  QuadrantCase c(n);
  Euler2DSolver solver(c.grid, SchemeConfig::ud5(), c.fill);
  EulerState2D out;
  for (auto _ : bench) {
    solver.rhs(c.state, 0.0, out);
    benchmark::DoNotOptimize(out.data());
  }
  bench.SetItemsProcessed(bench.iterations() * n * n);
}

void bm_euler2d_rhs_serial(benchmark::State& bench) {
  const int n = int(bench.range(0));
  QuadrantCase c(n);
  ref::Euler2DRef solver(c.grid, SchemeConfig::ud5(), c.fill);
  EulerState2D out;
  for (auto _ : bench) {
    solver.rhs(c.state, 0.0, out);
    benchmark::DoNotOptimize(out.data());
  }
  bench.SetItemsProcessed(bench.iterations() * n * n);
}

void bm_reconstruct(benchmark::State& bench, const SchemeConfig& cfg) {
  const int n = 4096;
  const double dx = 2.0 / n;
  const ReconKernel kernel(cfg, dx);
  const ScalarField u = make_scalar_field(n);
  std::vector<double> fhat(n - 5);
  for (auto _ : bench) {
    for (int i = 0; i + 5 < n; ++i)
      fhat[i] = kernel.reconstruct(&u.data[std::size_t(i) + ghost_width]);
    benchmark::DoNotOptimize(fhat.data());
  }
  bench.SetItemsProcessed(bench.iterations() * (n - 5));
}

void bm_reconstruct_loc(benchmark::State& b) {
  bm_reconstruct(b, SchemeConfig::loc());
}
void bm_reconstruct_js5(benchmark::State& b) {
  bm_reconstruct(b, SchemeConfig::js5());
}
void bm_reconstruct_ud5(benchmark::State& b) {
  bm_reconstruct(b, SchemeConfig::ud5());
}

BENCHMARK(bm_scalar_rhs_parallel)->Arg(1024)->Arg(8192)->Arg(65536);
BENCHMARK(bm_scalar_rhs_serial)->Arg(1024)->Arg(8192)->Arg(65536);
BENCHMARK(bm_euler2d_rhs_parallel)->Arg(64)->Arg(128);
BENCHMARK(bm_euler2d_rhs_serial)->Arg(64)->Arg(128);
BENCHMARK(bm_reconstruct_loc);
BENCHMARK(bm_reconstruct_js5);
BENCHMARK(bm_reconstruct_ud5);

}  // namespace

BENCHMARK_MAIN();
