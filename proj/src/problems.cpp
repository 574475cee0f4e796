#include "weno/problems.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace weno {

namespace {

constexpr double pi = 3.14159265358979323846;

// Translation by unit speed on [-1,1), periodically wrapped.
double wrap_unit(double x) {
  return x - 2.0 * std::floor((x + 1.0) / 2.0);
}

std::function<double(double, double)> advect_exact(
    std::function<double(double)> init) {
  return [init](double x, double t) { return init(wrap_unit(x - t)); };
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* kind_name(ProblemKind k) {
  switch (k) {
    case ProblemKind::ScalarAdvection: return "scalar-advection";
    case ProblemKind::ReconstructionOnly: return "reconstruction-only";
    case ProblemKind::Euler1D: return "euler1d";
    default: return "euler2d";
  }
}

ProblemSpec scalar_entry(std::string name, double t_end, int n,
                         std::function<double(double)> init, bool has_exact) {
  ProblemSpec s;
  s.name = std::move(name);
  s.kind = ProblemKind::ScalarAdvection;
  s.dim = 1;
  s.x_lo = -1.0;
  s.x_hi = 1.0;
  s.t_end = t_end;
  s.default_n = n;
  s.bc = BoundaryKind::Periodic;
  s.scalar_init = init;
  if (has_exact) s.scalar_exact = advect_exact(init);
  return s;
}

ProblemSpec euler_entry(std::string name, double x_lo, double x_hi,
                        double t_end, int n,
                        std::function<Prim1D(double)> init) {
  ProblemSpec s;
  s.name = std::move(name);
  s.kind = ProblemKind::Euler1D;
  s.dim = 1;
  s.x_lo = x_lo;
  s.x_hi = x_hi;
  s.t_end = t_end;
  s.default_n = n;
  s.bc = BoundaryKind::ZeroGradient;
  s.euler_init = std::move(init);
  return s;
}

std::vector<ProblemSpec> build_catalog() {
  std::vector<ProblemSpec> cat;

  cat.push_back(scalar_entry(
      "advect-sine", 2.0, 200, [](double x) { return std::sin(pi * x); },
      true));

  cat.push_back(scalar_entry(
      "advect-critical", 2.0, 200,
      [](double x) { return std::sin(pi * x - std::sin(pi * x) / pi); },
      true));

  cat.push_back(scalar_entry(
      "advect-sine-cubed", 2.0, 200,
      [](double x) {
        const double s = std::sin(pi * x);
        return s * s * s;
      },
      true));

  {
    ProblemSpec s;
    s.name = "reconstruct-jump";
    s.kind = ProblemKind::ReconstructionOnly;
    s.dim = 1;
    s.x_lo = -1.0;
    s.x_hi = 1.0;
    s.t_end = 0.0;
    s.default_n = 200;
    s.bc = BoundaryKind::ZeroGradient;
    s.scalar_init = [](double x) {
      return x * x * x + std::cos(x) + (x > 0.5 ? 1.0 : 0.0);
    };
    cat.push_back(std::move(s));
  }

  cat.push_back(scalar_entry(
      "weights-trace", 2.0, 200,
      [](double x) {
        const double base = -std::sin(pi * x) - 0.5 * x * x * x;
        return x < 0.0 ? base : base + 1.0;
      },
      false));

  cat.push_back(scalar_entry("advect-shapes", 8.0, 200,
                             composite_wave_profile(0.005), false));

  cat.push_back(euler_entry("sod", -5.0, 5.0, 1.3, 200, [](double x) {
    return x < 0.0 ? Prim1D{1.0, 0.0, 1.0} : Prim1D{0.125, 0.0, 0.1};
  }));

  cat.push_back(euler_entry("lax", -5.0, 5.0, 1.3, 200, [](double x) {
    return x < 0.0 ? Prim1D{0.445, 0.698, 3.528} : Prim1D{0.5, 0.0, 0.571};
  }));

  cat.push_back(euler_entry("shu-osher", -5.0, 5.0, 1.8, 200, [](double x) {
    return x < -4.0 ? Prim1D{3.857143, 2.629369, 31.0 / 3.0}
                    : Prim1D{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
  }));

  {
    ProblemSpec s;
    s.name = "riemann2d";
    s.kind = ProblemKind::Euler2D;
    s.dim = 2;
    s.x_lo = 0.0;
    s.x_hi = 1.0;
    s.y_lo = 0.0;
    s.y_hi = 1.0;
    s.t_end = 0.8;
    s.default_n = 400;
    s.default_ny = 400;
    s.bc = BoundaryKind::ZeroGradient;
    s.euler2d_init = [](double x, double y) {
      if (x >= 0.8 && y >= 0.8) return Prim2D{1.5, 0.0, 0.0, 1.5};
      if (x < 0.8 && y >= 0.8) return Prim2D{0.5323, 1.206, 0.0, 0.3};
      if (x < 0.8 && y < 0.8) return Prim2D{0.138, 1.206, 1.206, 0.029};
      return Prim2D{0.5323, 0.0, 1.206, 0.3};
    };
    cat.push_back(std::move(s));
  }

  {
    ProblemSpec s;
    s.name = "dmr";
    s.kind = ProblemKind::Euler2D;
    s.dim = 2;
    s.x_lo = 0.0;
    s.x_hi = 4.0;
    s.y_lo = 0.0;
    s.y_hi = 1.0;
    s.t_end = 0.2;
    s.default_n = 500;
    s.default_ny = 500;
    s.bc = BoundaryKind::ZeroGradient;
    s.euler2d_init = [](double x, double y) {
      const DmrSetup& d = dmr_setup();
      return x < d.shock.split_x(y, 0.0) ? d.post : d.pre;
    };
    cat.push_back(std::move(s));
  }

  return cat;
}

}  // namespace

std::function<double(double)> composite_wave_profile(double delta) {
  const double z = -0.7;
  const double beta = std::log(2.0) / (36.0 * delta * delta);
  auto G = [beta](double x, double zc) {
    return std::exp(-beta * (x - zc) * (x - zc));
  };
  return [G, z, delta](double x) {
    if (x > -0.8 && x < 0.2)
      return (G(x, z - delta) + G(x, z) + 4.0 * G(x, z + delta)) / 6.0;
    if (x >= 0.2 && x <= 0.8) return 1.0;
    return 0.0;
  };
}

std::string ProblemSpec::describe() const {
  std::ostringstream os;
  os << "name=" << name << " kind=" << kind_name(kind) << " dim=" << dim
     << " x_lo=" << fmt(x_lo) << " x_hi=" << fmt(x_hi) << " y_lo=" << fmt(y_lo)
     << " y_hi=" << fmt(y_hi) << " t_end=" << fmt(t_end)
     << " default_n=" << default_n << " default_ny=" << default_ny << " bc="
     << (bc == BoundaryKind::Periodic ? "periodic" : "zero-gradient");
  return os.str();
}

namespace {

const std::vector<ProblemSpec>& catalog() {
  static const std::vector<ProblemSpec> cat = build_catalog();
  return cat;
}

}  // namespace

const ProblemSpec& catalog_lookup(const std::string& name) {
  for (const auto& s : catalog())
    if (s.name == name) return s;
  std::string msg = "unknown problem '" + name + "'; available:";
  for (const auto& s : catalog()) msg += " " + s.name;
  throw std::invalid_argument(msg);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& s : catalog()) names.push_back(s.name);
  return names;
}

// Mach-10 normal-shock constants for the oblique shock inclined 60 degrees
// to the wall. Upstream (1.4, 0, 0, 1) has sound speed 1, so the shock runs
// at speed 10 along its normal (sqrt(3)/2, -1/2):
//   density ratio  (gamma+1)M^2 / ((gamma-1)M^2 + 2) = 240/42, rho2 = 8
//   pressure       (2 gamma M^2 - (gamma-1)) / (gamma+1) = 279.6/2.4 = 116.5
//   normal speed   s (1 - rho1/rho2) = 10 (1 - 1.4/8) = 8.25
// The shock foot sits at x = 1/6 on the wall; a horizontal cut at height y
// meets the shock at x = 1/6 + y/sqrt(3), moving right at 20/sqrt(3).
const DmrSetup& dmr_setup() {
  static const DmrSetup setup = [] {
    DmrSetup d;
    d.pre = Prim2D{1.4, 0.0, 0.0, 1.0};
    const double sqrt3 = std::sqrt(3.0);
    d.post = Prim2D{8.0, 8.25 * sqrt3 / 2.0, -8.25 / 2.0, 116.5};
    d.wall_start = 1.0 / 6.0;
    d.shock.post = prim_to_cons(d.post);
    d.shock.pre = prim_to_cons(d.pre);
    d.shock.foot_x = 1.0 / 6.0;
    d.shock.inv_slope = 1.0 / sqrt3;
    d.shock.foot_speed = 20.0 / sqrt3;
    return d;
  }();
  return setup;
}

void dmr_boundary_fill(Field2D& q, double t, const DmrSetup& setup,
                       const Grid2D& grid) {
  Boundary2D bc;
  bc.left = {EdgeKind::Inflow, setup.shock.post};
  bc.right = {EdgeKind::Outflow, {}};
  bc.bottom = {EdgeKind::Outflow, {}};  // rewritten below
  bc.top = {EdgeKind::MovingShockTop, {}};
  bc.shock = setup.shock;
  fill_boundary2d(q, grid, bc, q, t);

  // Bottom edge: exact post-shock state ahead of the wall start, reflecting
  // wall from there on; spans the full padded width so it defines the
  // bottom corners.
  const int g = ghost_width;
  for (int i = -g; i < grid.nx + g; ++i) {
    const bool ahead = grid.xc(i) < setup.wall_start;
    for (int k = 0; k < g; ++k) {
      if (ahead) {
        q(i, -1 - k, 0) = setup.shock.post.rho;
        q(i, -1 - k, 1) = setup.shock.post.momx;
        q(i, -1 - k, 2) = setup.shock.post.momy;
        q(i, -1 - k, 3) = setup.shock.post.ene;
      } else {
        for (int c = 0; c < 4; ++c) q(i, -1 - k, c) = q(i, k, c);
        q(i, -1 - k, 2) = -q(i, -1 - k, 2);
      }
    }
  }
}

GhostFiller make_dmr_filler(const Grid2D& grid) {
  return [grid](Field2D& q, double t) {
    dmr_boundary_fill(q, t, dmr_setup(), grid);
  };
}

}  // namespace weno
