// Unit tests for the five-point reconstruction kernels: candidate fluxes,
// smoothness indicators, nonlinear weights, and their asymptotic behavior
// on smooth and discontinuous windows.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "weno/stencil.hpp"

using namespace weno;

namespace {

constexpr double pi = 3.14159265358979323846;

std::array<double, 5> sample_window(double (*f)(double), double x0, double dx) {
  std::array<double, 5> w;
  for (int m = 0; m < 5; ++m) w[m] = f(x0 + (m - 2) * dx);
  return w;
}

double sin_pi(double x) { return std::sin(pi * x); }

// Window straddling a unit jump at x=0.2 with the jump always falling
// between nodes 2 and 3 (node offsets -2.4..1.6 in units of dx).
std::array<double, 5> jump_window(double dx) {
  std::array<double, 5> w;
  for (int m = 0; m < 5; ++m) {
    const double off = (m - 2.4) * dx;
    w[m] = std::sin(pi * (0.2 + off)) + (off > 0.0 ? 1.0 : 0.0);
  }
  return w;
}

double endpoint_slope(const std::vector<double>& vals) {
  return std::log2(vals.front() / vals.back()) /
         static_cast<double>(vals.size() - 1);
}

}  // namespace

TEST_CASE("substencil candidates on constant, linear, and geometric data") {
  const double c[5] = {4.0, 4.0, 4.0, 4.0, 4.0};
  auto qc = substencil_fluxes(c);
  for (double v : qc) CHECK(v == doctest::Approx(4.0).epsilon(1e-15));

  const double lin[5] = {0.0, 1.0, 2.0, 3.0, 4.0};
  auto ql = substencil_fluxes(lin);
  for (double v : ql) CHECK(v == doctest::Approx(2.5).epsilon(1e-15));

  // (2*1 - 7*2 + 11*4)/6, (-2 + 5*4 + 2*8)/6, (2*4 + 5*8 - 16)/6.
  const double geo[5] = {1.0, 2.0, 4.0, 8.0, 16.0};
  auto qg = substencil_fluxes(geo);
  CHECK(qg[0] == doctest::Approx(16.0 / 3.0).epsilon(1e-15));
  CHECK(qg[1] == doctest::Approx(17.0 / 3.0).epsilon(1e-15));
  CHECK(qg[2] == doctest::Approx(16.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("ideal reconstruction matches the linear candidate combination") {
  const double lin[5] = {0.0, 1.0, 2.0, 3.0, 4.0};
  CHECK(ideal_reconstruction(lin) == doctest::Approx(2.5).epsilon(1e-15));

  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    double w[5];
    for (double& v : w) v = dist(rng);
    const auto q = substencil_fluxes(w);
    const double combo = linear_weights[0] * q[0] + linear_weights[1] * q[1] +
                         linear_weights[2] * q[2];
    CHECK(std::abs(ideal_reconstruction(w) - combo) < 1e-14);
  }
}

TEST_CASE("difference-based indicators on hand data") {
  const double c[5] = {2.0, 2.0, 2.0, 2.0, 2.0};
  for (double b : beta_loc(c)) CHECK(b == 0.0);

  const double lin[5] = {0.0, 1.0, 2.0, 3.0, 4.0};
  auto bl = beta_loc(lin);
  for (double b : bl) CHECK(b == doctest::Approx(1.0).epsilon(1e-15));

  const double edge[5] = {0.0, 0.0, 0.0, 0.0, 1.0};
  auto be = beta_loc(edge);
  CHECK(be[0] == 0.0);
  CHECK(be[1] == 0.0);
  CHECK(be[2] == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("classic indicators on hand data") {
  const double lin[5] = {0.0, 1.0, 2.0, 3.0, 4.0};
  auto bl = beta_js(lin);
  for (double b : bl) CHECK(b == doctest::Approx(1.0).epsilon(1e-15));

  const double impulse[5] = {0.0, 0.0, 1.0, 0.0, 0.0};
  auto bi = beta_js(impulse);
  CHECK(bi[0] == doctest::Approx(13.0 / 12.0 + 9.0 / 4.0).epsilon(1e-15));
  CHECK(bi[1] == doctest::Approx(13.0 / 3.0).epsilon(1e-15));
  CHECK(bi[2] == doctest::Approx(13.0 / 12.0 + 9.0 / 4.0).epsilon(1e-15));
}

TEST_CASE("global indicator vanishes on quadratics and scores hand data") {
  const double quad[5] = {0.0, 1.0, 4.0, 9.0, 16.0};
  CHECK(zeta(quad) == 0.0);

  const double c[5] = {5.0, 5.0, 5.0, 5.0, 5.0};
  CHECK(zeta(c) == 0.0);

  // Second differences of (0,0,0,1,2) are (0,1,0): |0 - 2*1 + 0| = 2.
  const double ramp[5] = {0.0, 0.0, 0.0, 1.0, 2.0};
  CHECK(zeta(ramp) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("inverse-indicator weights reproduce hand values and ideal limits") {
  auto flat = weights_loc({0.0, 0.0, 0.0}, 1.0, 2.0);
  for (int k = 0; k < 3; ++k)
    CHECK(flat[k] == doctest::Approx(linear_weights[k]).epsilon(1e-15));

  auto even = weights_loc({1.0, 1.0, 1.0}, 1e-6, 2.0);
  for (int k = 0; k < 3; ++k)
    CHECK(even[k] == doctest::Approx(linear_weights[k]).epsilon(1e-12));

  // beta = (1,0,0), eps = 1, p = 1: alpha = (1/20, 6/10, 3/10), sum 0.95.
  auto w = weights_loc({1.0, 0.0, 0.0}, 1.0, 1.0);
  CHECK(w[0] == doctest::Approx(0.05 / 0.95).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.6 / 0.95).epsilon(1e-15));
  CHECK(w[2] == doctest::Approx(0.3 / 0.95).epsilon(1e-15));
}

TEST_CASE("indicator-ratio weights reproduce hand values and ideal limits") {
  auto smooth = weights_ud5({1.0, 2.0, 3.0}, 0.0, 1e-16, 2.0);
  for (int k = 0; k < 3; ++k)
    CHECK(smooth[k] == doctest::Approx(linear_weights[k]).epsilon(1e-15));

  auto even = weights_ud5({1.0, 1.0, 1.0}, 1.0, 1e-16, 1.0);
  for (int k = 0; k < 3; ++k)
    CHECK(even[k] == doctest::Approx(linear_weights[k]).epsilon(1e-12));

  // beta = (1,0,0), zeta = 1, eps = 1, p = 2:
  // alpha = (0.1*(1+1/4), 0.6*(1+1), 0.3*(1+1)).
  auto w = weights_ud5({1.0, 0.0, 0.0}, 1.0, 1.0, 2.0);
  const double a0 = 0.125, a1 = 1.2, a2 = 0.6;
  const double s = a0 + a1 + a2;
  CHECK(w[0] == doctest::Approx(a0 / s).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(a1 / s).epsilon(1e-15));
  CHECK(w[2] == doctest::Approx(a2 / s).epsilon(1e-15));
}

TEST_CASE("window mirroring reverses and is an involution") {
  const double w[5] = {1.0, 2.0, 3.0, 4.0, 5.0};
  auto m = mirror_window(w);
  CHECK(m[0] == 5.0);
  CHECK(m[1] == 4.0);
  CHECK(m[2] == 3.0);
  CHECK(m[3] == 2.0);
  CHECK(m[4] == 1.0);
  auto mm = mirror_window(m.data());
  for (int k = 0; k < 5; ++k) CHECK(mm[k] == w[k]);
}

TEST_CASE("weights form a convex combination on random windows") {
  std::mt19937 rng(42u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double scales[3] = {1.0, 1e8, 1e-8};

  for (Variant v : {Variant::Loc, Variant::Js5, Variant::Ud5}) {
    for (double p : {1.0, 2.0}) {
      SchemeConfig cfg;
      cfg.variant = v;
      cfg.p = p;
      cfg.epsilon = EpsilonPolicy::fixed(1e-12);
      ReconKernel kernel(cfg, 0.1);
      for (int trial = 0; trial < 200; ++trial) {
        double w[5];
        const double s = scales[trial % 3];
        for (double& x : w) x = s * dist(rng);
        auto om = kernel.weights(w);
        CHECK(om[0] >= 0.0);
        CHECK(om[1] >= 0.0);
        CHECK(om[2] >= 0.0);
        CHECK(std::abs(om[0] + om[1] + om[2] - 1.0) < 1e-14);
      }
    }
  }
}

TEST_CASE("forced linear weights reproduce the ideal reconstruction") {
  std::mt19937 rng(3u);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (Variant v : {Variant::Loc, Variant::Js5, Variant::Ud5}) {
    SchemeConfig cfg;
    cfg.variant = v;
    cfg.force_ideal = true;
    ReconKernel kernel(cfg, 0.1);
    for (int trial = 0; trial < 50; ++trial) {
      double w[5];
      for (double& x : w) x = dist(rng);
      CHECK(std::abs(kernel.reconstruct(w) - ideal_reconstruction(w)) < 1e-14);
    }
  }
}

TEST_CASE("interface value stays within the window hull on step data") {
  const double step[5] = {0.0, 0.0, 0.0, 1.0, 1.0};
  for (const SchemeConfig& cfg :
       {SchemeConfig::loc(), SchemeConfig::js5(), SchemeConfig::ud5()}) {
    const double r = reconstruct_interface(step, cfg, 0.1);
    CHECK(r >= -1e-12);
    CHECK(r <= 1.0 + 1e-12);
  }
}

TEST_CASE("interface reconstruction rejects non-finite windows") {
  const double bad[5] = {0.0, 0.0, std::nan(""), 0.0, 0.0};
  CHECK_THROWS_AS(reconstruct_interface(bad, SchemeConfig::ud5(), 0.1),
                  std::domain_error);
  const double inf[5] = {0.0, 1.0, 2.0, std::numeric_limits<double>::infinity(),
                         4.0};
  CHECK_THROWS_AS(reconstruct_interface(inf, SchemeConfig::js5(), 0.1),
                  std::domain_error);
}

TEST_CASE("configuration validation rejects bad epsilon and p") {
  SchemeConfig cfg = SchemeConfig::ud5();

  cfg.epsilon = EpsilonPolicy::fixed(0.0);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg.epsilon = EpsilonPolicy::fixed(-1e-6);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg.epsilon = EpsilonPolicy::scaled(0.0);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg = SchemeConfig::ud5();
  cfg.p = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg = SchemeConfig::ud5();
  cfg.epsilon = EpsilonPolicy::scaled(2.0);
  CHECK_THROWS_AS(ReconKernel(cfg, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ReconKernel(cfg, -0.1), std::invalid_argument);
}

TEST_CASE("scaled epsilon resolves to a power of the grid spacing") {
  SchemeConfig cfg = SchemeConfig::ud5();
  cfg.epsilon = EpsilonPolicy::scaled(2.0);
  ReconKernel kernel(cfg, 0.01);
  CHECK(kernel.epsilon() == doctest::Approx(1e-4).epsilon(1e-14));

  cfg.epsilon = EpsilonPolicy::fixed(1e-7);
  ReconKernel fixed_kernel(cfg, 0.01);
  CHECK(fixed_kernel.epsilon() == 1e-7);
}

TEST_CASE("nonlinear corrections decay on smooth windows") {
  // Slope of |reconstruct - ideal| under dx halving at a non-critical point.
  // The difference-based indicators carry odd-order terms that cap the
  // inverse-indicator variant near fourth order; the classic indicators give
  // fifth order and the indicator-ratio weights decay much faster.
  struct Case {
    Variant variant;
    double p;
    double min_slope;
  };
  const Case cases[] = {{Variant::Loc, 2.0, 3.7},
                        {Variant::Js5, 2.0, 4.5},
                        {Variant::Ud5, 1.0, 6.0}};
  for (const Case& c : cases) {
    SchemeConfig cfg;
    cfg.variant = c.variant;
    cfg.p = c.p;
    cfg.epsilon = EpsilonPolicy::fixed(1e-12);
    std::vector<double> errs;
    for (int k = 0; k < 4; ++k) {
      const double dx = 0.1 / (1 << k);
      ReconKernel kernel(cfg, dx);
      auto w = sample_window(sin_pi, 0.3, dx);
      errs.push_back(
          std::abs(kernel.reconstruct(w.data()) - ideal_reconstruction(w.data())));
    }
    CHECK(endpoint_slope(errs) >= c.min_slope);
  }
}

TEST_CASE("indicator-ratio weights approach the linear weights at high order") {
  SchemeConfig cfg = SchemeConfig::ud5();
  cfg.p = 1.0;
  std::vector<double> errs;
  for (int k = 0; k < 6; ++k) {
    const double dx = 0.1 / (1 << k);
    ReconKernel kernel(cfg, dx);
    auto w = sample_window(sin_pi, 0.3, dx);
    auto om = kernel.weights(w.data());
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
      m = std::max(m, std::abs(om[i] - linear_weights[i]));
    errs.push_back(m);
  }
  CHECK(endpoint_slope(errs) >= 4.5);
}

TEST_CASE("discontinuous substencil weights decay at the design rate") {
  // The union of the two substencils touching the jump should lose weight
  // like dx^(2p) for every variant once epsilon is negligible.
  struct Case {
    Variant variant;
    double p;
    double expected;
  };
  const Case cases[] = {{Variant::Ud5, 1.0, 2.0},
                        {Variant::Ud5, 2.0, 4.0},
                        {Variant::Loc, 1.0, 2.0},
                        {Variant::Js5, 1.0, 2.0}};
  for (const Case& c : cases) {
    SchemeConfig cfg;
    cfg.variant = c.variant;
    cfg.p = c.p;
    cfg.epsilon = EpsilonPolicy::fixed(1e-16);
    std::vector<double> wd;
    for (int k = 1; k <= 6; ++k) {
      const double dx = 0.1 / (1 << k);
      ReconKernel kernel(cfg, dx);
      auto w = jump_window(dx);
      auto om = kernel.weights(w.data());
      wd.push_back(om[1] + om[2]);
    }
    CHECK(endpoint_slope(wd) == doctest::Approx(c.expected).epsilon(0.3 / c.expected));
  }
}

TEST_CASE("global indicator decays at sixth order on smooth windows") {
  std::vector<double> zs;
  for (int k = 0; k < 6; ++k) {
    const double dx = 0.05 / (1 << k);
    auto w = sample_window(sin_pi, 0.3, dx);
    zs.push_back(zeta(w.data()));
  }
  CHECK(endpoint_slope(zs) >= 5.5);
}

TEST_CASE("kernel evaluation is deterministic") {
  const double w[5] = {0.3, -1.2, 0.7, 2.4, -0.9};
  for (const SchemeConfig& cfg :
       {SchemeConfig::loc(), SchemeConfig::js5(), SchemeConfig::ud5()}) {
    ReconKernel kernel(cfg, 0.05);
    const double a = kernel.reconstruct(w);
    const double b = kernel.reconstruct(w);
    CHECK(a == b);
  }
}

TEST_CASE("variant names") {
  CHECK(std::string(variant_name(Variant::Loc)) == "loc");
  CHECK(std::string(variant_name(Variant::Js5)) == "js5");
  CHECK(std::string(variant_name(Variant::Ud5)) == "ud5");
}
