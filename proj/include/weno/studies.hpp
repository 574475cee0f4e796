// Drivers behind the CLI subcommands and the acceptance checks: convergence
// tables, the discontinuous-reconstruction study, weight traces, and full
// benchmark runs with CSV emission.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weno/csv.hpp"
#include "weno/euler2d.hpp"
#include "weno/norms.hpp"
#include "weno/problems.hpp"
#include "weno/time_integration.hpp"

namespace weno {

// Evolves a scalar advection problem on n cells and returns the L1/Linf
// errors against the exact solution at the final time.
Norms advect_errors(const ProblemSpec& prob, const SchemeConfig& cfg, int n,
                    const StepPolicy& policy, Stepper stepper);

std::vector<ConvergenceRow> convergence_study(const ProblemSpec& prob,
                                              const SchemeConfig& cfg,
                                              const std::vector<int>& ns,
                                              const StepPolicy& policy,
                                              Stepper stepper);

// Derivative errors of the flux-difference approximation on the node at (or
// immediately left of) the jump and on the node two to its right, under
// grid refinement. Pure reconstruction, no time stepping.
struct ReconstructRow {
  int n = 0;
  double e_left = 0.0;
  double o_left = 0.0;
  double e_right = 0.0;
  double o_right = 0.0;
};

std::vector<ReconstructRow> reconstruct_study(const SchemeConfig& cfg,
                                              const std::vector<int>& ns);

// One convergence table per epsilon policy at a fixed variant and p.
struct EpsilonSweepEntry {
  EpsilonPolicy policy;
  std::vector<ConvergenceRow> rows;
};

std::vector<EpsilonSweepEntry> epsilon_sweep(
    const ProblemSpec& prob, Variant variant,
    const std::vector<EpsilonPolicy>& policies, double p,
    const std::vector<int>& ns, const StepPolicy& policy, Stepper stepper);

// Nonlinear and linear weights of the upwind window of every cell after a
// single reconstruction pass over the problem's initial data.
struct WeightsTraceRow {
  double x = 0.0;
  double w[3] = {0.0, 0.0, 0.0};
};

std::vector<WeightsTraceRow> weights_trace(const ProblemSpec& prob,
                                           const SchemeConfig& cfg, int n);

struct RunReport {
  std::string problem;
  std::string config;
  int n = 0;
  int ny = 0;
  int steps = 0;
  double t_end = 0.0;
  double wall_seconds = 0.0;
  double mass_change_rel = 0.0;
  double min_density = 0.0;
  double min_pressure = 0.0;
  std::vector<std::string> outputs;
  std::optional<double> reference_distance;
};

struct Run1DResult {
  RunReport report;
  std::vector<double> x;
  std::vector<double> scalar_u;        // scalar problems
  std::vector<double> rho, u, p;       // Euler problems
};

struct Run2DResult {
  RunReport report;
  Grid2D grid;
  EulerState2D state;
};

// Evolves a 1D catalog problem to its final time and writes the solution
// CSV into out_dir (empty out_dir skips file output). For the shock-entropy
// problem a reference CSV path may be supplied to report the L1 density
// distance against it.
Run1DResult run1d(const ProblemSpec& prob, const SchemeConfig& cfg, int n,
                  const StepPolicy& policy, const std::string& out_dir,
                  const std::string& reference_csv = "");

Run2DResult run2d(const ProblemSpec& prob, const SchemeConfig& cfg, int nx,
                  int ny, const StepPolicy& policy, const std::string& out_dir);

// Self-generated fine-grid reference for the shock-entropy problem; returns
// the CSV path it wrote.
std::string build_reference(const std::string& out_dir);

// L1 distance between a run's density profile and a reference CSV with
// columns (x, rho, ...), linearly interpolated onto the run's centers.
double reference_distance(const std::vector<double>& x,
                          const std::vector<double>& rho,
                          const std::string& reference_csv);

}  // namespace weno
