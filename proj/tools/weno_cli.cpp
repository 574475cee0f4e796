// Command-line harness over the solver library: convergence tables, the
// discontinuous-reconstruction study, epsilon sweeps, weight traces, shock
// benchmarks, and the fine-grid reference builder. One invocation performs
// one run and writes its CSV artifacts under --out.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "weno/csv.hpp"
#include "weno/euler1d.hpp"
#include "weno/norms.hpp"
#include "weno/problems.hpp"
#include "weno/stencil.hpp"
#include "weno/studies.hpp"
#include "weno/time_integration.hpp"

namespace fs = std::filesystem;
using namespace weno;

namespace {

struct CommonOpts {
  std::string scheme = "ud5";
  double p = 0.0;           // 0 keeps the scheme default
  std::string eps;          // empty keeps the scheme default
  bool single_alpha = false;
  std::string out = "out";
  bool print_config = false;
};

struct StepOpts {
  double cfl = 0.0;
  double dt_const = 0.0;
  std::string stepper;      // empty keeps the subcommand default
};

void add_scheme_opts(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--scheme", o.scheme, "reconstruction scheme")
      ->check(CLI::IsMember({"loc", "js5", "ud5"}))
      ->capture_default_str();
  sub->add_option("--p", o.p, "weight exponent (scheme default if omitted)");
  sub->add_option("--eps", o.eps,
                  "epsilon policy: fixed:<value> or scaled:<exponent>");
  sub->add_flag("--single-alpha", o.single_alpha,
                "split all fields with one wavespeed bound");
  sub->add_option("--out", o.out, "output directory")->capture_default_str();
  sub->add_flag("--print-config", o.print_config,
                "echo the resolved configuration before running");
}

void add_step_opts(CLI::App* sub, StepOpts& o, bool with_stepper) {
  sub->add_option("--cfl", o.cfl, "CFL number for wave-speed step control");
  sub->add_option("--dt-const", o.dt_const,
                  "constant c in dt = c * dx^(5/4) step control");
  if (with_stepper)
    sub->add_option("--stepper", o.stepper, "time stepper")
        ->check(CLI::IsMember({"ssp-rk3", "rk4"}));
}

EpsilonPolicy parse_eps(const std::string& s) {
  const auto colon = s.find(':');
  const std::string usage =
      "--eps expects fixed:<value> or scaled:<exponent>, got '" + s + "'";
  if (colon == std::string::npos) throw std::invalid_argument(usage);
  const std::string kind = s.substr(0, colon);
  const std::string num = s.substr(colon + 1);
  double value = 0.0;
  std::size_t used = 0;
  try {
    value = std::stod(num, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(usage);
  }
  if (used != num.size()) throw std::invalid_argument(usage);
  if (kind == "fixed") return EpsilonPolicy::fixed(value);
  if (kind == "scaled") return EpsilonPolicy::scaled(value);
  throw std::invalid_argument(usage);
}

SchemeConfig make_config(const CommonOpts& o) {
  SchemeConfig cfg = o.scheme == "loc"   ? SchemeConfig::loc()
                     : o.scheme == "js5" ? SchemeConfig::js5()
                                         : SchemeConfig::ud5();
  if (o.p != 0.0) cfg.p = o.p;
  if (!o.eps.empty()) cfg.epsilon = parse_eps(o.eps);
  cfg.single_alpha = o.single_alpha;
  return cfg;
}

// Shock runs want CFL stepping by default, convergence runs the accuracy-
// scaled dt; an explicit flag always wins and the two are exclusive.
StepPolicy make_policy(const StepOpts& o, bool prefer_accuracy) {
  if (o.cfl > 0.0 && o.dt_const > 0.0)
    throw std::invalid_argument("--cfl and --dt-const are exclusive");
  if (o.cfl > 0.0) return StepPolicy::cfl(o.cfl);
  if (o.dt_const > 0.0) return StepPolicy::accuracy_scaled(o.dt_const);
  return prefer_accuracy ? StepPolicy::accuracy_scaled(default_dt_scale())
                         : StepPolicy::cfl(0.5);
}

Stepper make_stepper(const StepOpts& o, Stepper fallback) {
  if (o.stepper.empty()) return fallback;
  return o.stepper == "rk4" ? Stepper::Rk4 : Stepper::SspRk3;
}

std::string eps_label(const EpsilonPolicy& e) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s:%g",
                e.kind == EpsilonPolicy::Kind::Fixed ? "fixed" : "scaled",
                e.value);
  return buf;
}

void echo_config(const std::string& problem, const SchemeConfig& cfg,
                 const StepPolicy& policy, Stepper stepper,
                 const std::vector<int>& ns, int ny,
                 const std::string& out) {
  std::printf("problem=%s\n", problem.c_str());
  std::printf("scheme=%s\n", variant_name(cfg.variant));
  std::printf("eps=%s\n", eps_label(cfg.epsilon).c_str());
  std::printf("p=%g\n", cfg.p);
  std::printf("single_alpha=%d\n", cfg.single_alpha ? 1 : 0);
  std::printf("stepper=%s\n",
              stepper == Stepper::SspRk3 ? "ssp-rk3" : "rk4");
  std::printf("step=%s:%.17g\n",
              policy.kind == StepPolicy::Kind::Cfl ? "cfl" : "dt-const",
              policy.value);
  std::printf("n=");
  for (std::size_t i = 0; i < ns.size(); ++i)
    std::printf("%s%d", i ? "," : "", ns[i]);
  std::printf("\n");
  if (ny > 0) std::printf("ny=%d\n", ny);
  std::printf("out=%s\n", out.c_str());
}

std::string order_cell(double v) {
  if (std::isnan(v)) return "      --";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%8.4f", v);
  return buf;
}

void print_convergence(const std::vector<ConvergenceRow>& rows) {
  std::printf("%8s  %14s  %8s  %14s  %8s\n", "N", "L1", "order", "Linf",
              "order");
  for (const auto& r : rows)
    std::printf("%8d  %14.6e  %s  %14.6e  %s\n", r.n, r.l1_error,
                order_cell(r.l1_order).c_str(), r.linf_error,
                order_cell(r.linf_order).c_str());
}

std::string write_convergence_csv(const std::string& path,
                                  const std::vector<ConvergenceRow>& rows) {
  CsvTable table;
  table.header = {"n", "l1_error", "l1_order", "linf_error", "linf_order"};
  for (const auto& r : rows)
    table.rows.push_back({double(r.n), r.l1_error, r.l1_order, r.linf_error,
                          r.linf_order});
  write_csv(path, table);
  return path;
}

void print_report(const RunReport& rep) {
  std::printf("problem: %s\n", rep.problem.c_str());
  std::printf("config: %s\n", rep.config.c_str());
  if (rep.ny > 0)
    std::printf("grid: %d x %d\n", rep.n, rep.ny);
  else
    std::printf("grid: n=%d\n", rep.n);
  std::printf("steps: %d\n", rep.steps);
  std::printf("t_end: %g\n", rep.t_end);
  std::printf("wall_seconds: %.3f\n", rep.wall_seconds);
  std::printf("mass_change_rel: %.3e\n", rep.mass_change_rel);
  std::printf("min_density: %.6g\n", rep.min_density);
  std::printf("min_pressure: %.6g\n", rep.min_pressure);
  if (rep.reference_distance)
    std::printf("reference_distance: %.6g\n", *rep.reference_distance);
  for (const auto& f : rep.outputs) std::printf("wrote: %s\n", f.c_str());
}

int cmd_convergence(const CommonOpts& co, const StepOpts& so,
                    const std::string& probname, std::vector<int> ns) {
  if (ns.empty()) ns = {40, 80, 160, 320, 640};
  const ProblemSpec& prob = catalog_lookup(probname);
  const SchemeConfig cfg = make_config(co);
  const StepPolicy policy = make_policy(so, true);
  const Stepper stepper = make_stepper(so, Stepper::Rk4);
  if (co.print_config)
    echo_config(probname, cfg, policy, stepper, ns, 0, co.out);

  const auto rows = convergence_study(prob, cfg, ns, policy, stepper);
  print_convergence(rows);

  fs::create_directories(co.out);
  const std::string path = co.out + "/convergence_" + probname + "_" +
                           variant_name(cfg.variant) + ".csv";
  std::printf("wrote: %s\n", write_convergence_csv(path, rows).c_str());
  return 0;
}

int cmd_reconstruct_study(const CommonOpts& co, std::vector<int> ns) {
  if (ns.empty()) ns = {25, 50, 100, 200, 400, 800, 1600};
  const SchemeConfig cfg = make_config(co);
  if (co.print_config)
    echo_config("reconstruct-jump", cfg, StepPolicy::cfl(0.5),
                Stepper::SspRk3, ns, 0, co.out);

  const auto rows = reconstruct_study(cfg, ns);
  std::printf("%8s  %14s  %8s  %14s  %8s\n", "N", "e(left)", "order",
              "e(right)", "order");
  for (const auto& r : rows)
    std::printf("%8d  %14.6e  %s  %14.6e  %s\n", r.n, r.e_left,
                order_cell(r.o_left).c_str(), r.e_right,
                order_cell(r.o_right).c_str());

  fs::create_directories(co.out);
  CsvTable table;
  table.header = {"n", "e_left", "o_left", "e_right", "o_right"};
  for (const auto& r : rows)
    table.rows.push_back({double(r.n), r.e_left, r.o_left, r.e_right,
                          r.o_right});
  char suffix[32];
  std::snprintf(suffix, sizeof(suffix), "_p%g.csv", cfg.p);
  const std::string path = co.out + "/reconstruct_" +
                           variant_name(cfg.variant) + suffix;
  write_csv(path, table);
  std::printf("wrote: %s\n", path.c_str());
  return 0;
}

int cmd_epsilon_sweep(const CommonOpts& co, const StepOpts& so,
                      const std::string& probname,
                      const std::vector<std::string>& eps_specs,
                      std::vector<int> ns) {
  if (ns.empty()) ns = {40, 80, 160, 320, 640, 1280};
  std::vector<EpsilonPolicy> policies;
  if (eps_specs.empty()) {
    policies = {EpsilonPolicy::fixed(1e-6),  EpsilonPolicy::fixed(1e-16),
                EpsilonPolicy::scaled(1.0),  EpsilonPolicy::scaled(2.0),
                EpsilonPolicy::scaled(3.0),  EpsilonPolicy::scaled(5.0)};
  } else {
    for (const auto& s : eps_specs) policies.push_back(parse_eps(s));
  }

  const ProblemSpec& prob = catalog_lookup(probname);
  const SchemeConfig cfg = make_config(co);
  const double p = cfg.p;
  const StepPolicy policy = make_policy(so, true);
  const Stepper stepper = make_stepper(so, Stepper::Rk4);
  if (co.print_config)
    echo_config(probname, cfg, policy, stepper, ns, 0, co.out);

  const auto entries =
      epsilon_sweep(prob, cfg.variant, policies, p, ns, policy, stepper);
  fs::create_directories(co.out);
  for (const auto& entry : entries) {
    std::string label = eps_label(entry.policy);
    std::printf("eps=%s\n", label.c_str());
    print_convergence(entry.rows);
    for (char& c : label)
      if (c == ':') c = '_';
    char pb[16];
    std::snprintf(pb, sizeof(pb), "%g", p);
    const std::string path = co.out + "/epsilon_" + probname + "_" +
                             variant_name(cfg.variant) + "_p" + pb + "_" +
                             label + ".csv";
    std::printf("wrote: %s\n", write_convergence_csv(path, entry.rows).c_str());
  }
  return 0;
}

int cmd_weights_trace(const CommonOpts& co, const std::string& probname,
                      int n) {
  const ProblemSpec& prob = catalog_lookup(probname);
  const SchemeConfig cfg = make_config(co);
  if (co.print_config)
    echo_config(probname, cfg, StepPolicy::cfl(0.5), Stepper::SspRk3, {n}, 0,
                co.out);

  const auto rows = weights_trace(prob, cfg, n);
  int flagged = 0;
  double max_dev = 0.0;
  for (const auto& r : rows) {
    const double dev = std::max({std::abs(r.w[0] - 0.1),
                                 std::abs(r.w[1] - 0.6),
                                 std::abs(r.w[2] - 0.3)});
    max_dev = std::max(max_dev, dev);
    if (dev > 0.1) ++flagged;
  }
  std::printf("cells: %zu\n", rows.size());
  std::printf("max |w - d|: %.6g\n", max_dev);
  std::printf("cells with |w - d| > 0.1: %d\n", flagged);

  fs::create_directories(co.out);
  CsvTable table;
  table.header = {"x", "w0", "w1", "w2", "d0", "d1", "d2"};
  for (const auto& r : rows)
    table.rows.push_back({r.x, r.w[0], r.w[1], r.w[2], 0.1, 0.6, 0.3});
  char suffix[32];
  std::snprintf(suffix, sizeof(suffix), "_n%d.csv", n);
  const std::string path = co.out + "/weights_" + probname + "_" +
                           variant_name(cfg.variant) + suffix;
  write_csv(path, table);
  std::printf("wrote: %s\n", path.c_str());
  return 0;
}

int cmd_run1d(const CommonOpts& co, const StepOpts& so,
              const std::string& probname, int n) {
  const ProblemSpec& prob = catalog_lookup(probname);
  const SchemeConfig cfg = make_config(co);
  const StepPolicy policy = make_policy(so, false);
  const int cells = n > 0 ? n : prob.default_n;
  if (co.print_config)
    echo_config(probname, cfg, policy, Stepper::SspRk3, {cells}, 0, co.out);

  std::string reference_csv;
  if (probname == "shu-osher") {
    reference_csv = co.out + "/shu_osher_reference.csv";
    if (!fs::exists(reference_csv)) {
      std::printf("building reference profile (js5, N=2000)...\n");
      reference_csv = build_reference(co.out);
    }
  }

  const auto res = run1d(prob, cfg, cells, policy, co.out, reference_csv);
  print_report(res.report);
  return 0;
}

int cmd_run2d(const CommonOpts& co, const StepOpts& so,
              const std::string& probname, int n, int ny) {
  const ProblemSpec& prob = catalog_lookup(probname);
  const SchemeConfig cfg = make_config(co);
  const StepPolicy policy = make_policy(so, false);
  const int nx = n > 0 ? n : prob.default_n;
  const int nyy = ny > 0 ? ny : prob.default_ny;
  if (co.print_config)
    echo_config(probname, cfg, policy, Stepper::SspRk3, {nx}, nyy, co.out);

  const auto res = run2d(prob, cfg, nx, nyy, policy, co.out);
  print_report(res.report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-difference WENO harness"};
  app.require_subcommand(1);

  CommonOpts co;
  StepOpts so;
  std::vector<int> ns;
  std::vector<std::string> eps_specs;

  // Positionals and sized options get one variable per subcommand so the
  // defaults of inactive subcommands cannot leak into the active one.
  std::string conv_prob = "advect-sine";
  std::string sweep_prob = "advect-sine-cubed";
  std::string trace_prob = "weights-trace";
  std::string r1_prob = "sod";
  std::string r2_prob = "riemann2d";
  int trace_n = 200;
  int r1_n = 0, r2_n = 0, r2_ny = 0;

  CLI::App* conv = app.add_subcommand(
      "convergence", "grid-refinement error table for a smooth problem");
  conv->add_option("problem", conv_prob, "catalog problem");
  add_scheme_opts(conv, co);
  add_step_opts(conv, so, true);
  conv->add_option("--n", ns, "grid sizes (repeatable)");

  CLI::App* recon = app.add_subcommand(
      "reconstruct-study",
      "derivative errors next to an isolated jump under refinement");
  add_scheme_opts(recon, co);
  recon->add_option("--n", ns, "grid sizes (repeatable)");

  CLI::App* sweep = app.add_subcommand(
      "epsilon-sweep", "one convergence table per epsilon policy");
  sweep->add_option("problem", sweep_prob, "catalog problem");
  add_scheme_opts(sweep, co);
  add_step_opts(sweep, so, true);
  sweep->add_option("--n", ns, "grid sizes (repeatable)");
  sweep->add_option("--sweep-eps", eps_specs,
                    "epsilon policies to sweep (repeatable; default set "
                    "covers fixed and scaled)");

  CLI::App* trace = app.add_subcommand(
      "weights-trace", "nonlinear weights of every cell on the initial data");
  trace->add_option("problem", trace_prob, "catalog problem");
  add_scheme_opts(trace, co);
  trace->add_option("--n", trace_n, "grid size");

  CLI::App* r1 = app.add_subcommand("run1d", "evolve a 1D benchmark problem");
  r1->add_option("problem", r1_prob, "catalog problem");
  add_scheme_opts(r1, co);
  add_step_opts(r1, so, false);
  r1->add_option("--n", r1_n, "grid size (problem default if omitted)");

  CLI::App* r2 = app.add_subcommand("run2d", "evolve a 2D benchmark problem");
  r2->add_option("problem", r2_prob, "catalog problem");
  add_scheme_opts(r2, co);
  add_step_opts(r2, so, false);
  r2->add_option("--n", r2_n, "cells along x (problem default if omitted)");
  r2->add_option("--ny", r2_ny, "cells along y (problem default if omitted)");

  CLI::App* ref = app.add_subcommand(
      "reference", "build the fine-grid shock-entropy reference profile");
  ref->add_option("--out", co.out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(conv))
      return cmd_convergence(co, so, conv_prob, ns);
    if (app.got_subcommand(recon)) return cmd_reconstruct_study(co, ns);
    if (app.got_subcommand(sweep))
      return cmd_epsilon_sweep(co, so, sweep_prob, eps_specs, ns);
    if (app.got_subcommand(trace))
      return cmd_weights_trace(co, trace_prob, trace_n);
    if (app.got_subcommand(r1)) return cmd_run1d(co, so, r1_prob, r1_n);
    if (app.got_subcommand(r2)) return cmd_run2d(co, so, r2_prob, r2_n, r2_ny);
    if (app.got_subcommand(ref)) {
      std::printf("wrote: %s\n", build_reference(co.out).c_str());
      return 0;
    }
    return 3;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const AdmissibilityError& e) {
    std::fprintf(stderr, "admissibility failure: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
