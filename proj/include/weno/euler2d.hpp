// 2D Euler equations with dimension-by-dimension reconstruction and the
// boundary machinery for the quadrant Riemann and Mach-reflection problems.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "weno/euler1d.hpp"
#include "weno/grid.hpp"
#include "weno/stencil.hpp"

namespace weno {

struct Grid2D {
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
  int nx = 10, ny = 10;
  int ghost = ghost_width;

  Grid2D() = default;
  Grid2D(double xlo, double xhi, double ylo, double yhi, int nx_, int ny_)
      : x_lo(xlo), x_hi(xhi), y_lo(ylo), y_hi(yhi), nx(nx_), ny(ny_) {
    if (!(x_hi > x_lo) || !(y_hi > y_lo))
      throw std::invalid_argument("grid needs positive extents");
    if (nx < 10 || ny < 10)
      throw std::invalid_argument("grid needs at least 10 cells per direction");
  }

  double dx() const { return (x_hi - x_lo) / nx; }
  double dy() const { return (y_hi - y_lo) / ny; }
  double xc(int i) const { return x_lo + (i + 0.5) * dx(); }
  double yc(int j) const { return y_lo + (j + 0.5) * dy(); }
};

struct Cons2D {
  double rho = 0.0;
  double momx = 0.0;
  double momy = 0.0;
  double ene = 0.0;
};

struct Prim2D {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

Prim2D cons_to_prim(const Cons2D& q, double gamma = gamma_default);
Cons2D prim_to_cons(const Prim2D& w, double gamma = gamma_default);

// Four conserved components on a ghost-framed nx x ny grid;
// i in [-g, nx+g), j in [-g, ny+g).
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny, int g = ghost_width)
      : nx_(nx), ny_(ny), g_(g), sj_(4), si_((ny + 2 * g) * 4),
        data_((nx + 2 * g) * (ny + 2 * g) * 4, 0.0) {}

  double& operator()(int i, int j, int c) {
    return data_[(i + g_) * si_ + (j + g_) * sj_ + c];
  }
  double operator()(int i, int j, int c) const {
    return data_[(i + g_) * si_ + (j + g_) * sj_ + c];
  }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int ghosts() const { return g_; }

 private:
  int nx_ = 0, ny_ = 0, g_ = ghost_width, sj_ = 4, si_ = 0;
  std::vector<double> data_;
};

enum class EdgeKind { Dirichlet, Reflecting, Inflow, Outflow, MovingShockTop };

struct EdgeBc {
  EdgeKind kind = EdgeKind::Outflow;
  Cons2D state{};  // Inflow only
};

// Oblique shock trace for the moving top boundary: the pre/post split
// abscissa at height y and time t is foot_x + y*inv_slope + foot_speed*t.
struct MovingShockParams {
  Cons2D post{};
  Cons2D pre{};
  double foot_x = 0.0;
  double inv_slope = 0.0;
  double foot_speed = 0.0;

  double split_x(double y, double t) const {
    return foot_x + y * inv_slope + foot_speed * t;
  }
};

struct Boundary2D {
  EdgeBc left, right, bottom, top;
  MovingShockParams shock{};  // read only when an edge is MovingShockTop

  // MovingShockTop is only meaningful on the top edge.
  void validate() const;
};

// Fills the ghost frame from the per-edge conditions: x edges first, then y
// edges across the full padded width (this order defines the corners).
// Dirichlet edges copy from the frozen frame captured at setup.
void fill_boundary2d(Field2D& q, const Grid2D& grid, const Boundary2D& bc,
                     const Field2D& frozen, double t);

using GhostFiller = std::function<void(Field2D&, double)>;

GhostFiller make_boundary_filler(const Grid2D& grid, const Boundary2D& bc,
                                 const Field2D& frozen);

// Flat interior state layout: ((i * ny) + j) * 4 + c.
using EulerState2D = std::vector<double>;

// Dimension-by-dimension RHS: -(dF/dx + dG/dy), each direction swept with
// the shared characteristic line kernel. The y direction reuses the x kernel
// on component-swapped lines, so mirror-symmetric data stays bit symmetric.
class Euler2DSolver {
 public:
  Euler2DSolver(const Grid2D& grid, const SchemeConfig& cfg, GhostFiller fill,
                double gamma = gamma_default);

  void rhs(const EulerState2D& interior, double t, EulerState2D& out,
           const char* stage_tag = "");

  // max(|u| + c) and max(|v| + c) over the interior, for CFL control.
  std::pair<double, double> speed_bounds(const EulerState2D& interior) const;

  const Grid2D& grid() const { return grid_; }

 private:
  Grid2D grid_;
  SchemeConfig cfg_;
  GhostFiller fill_;
  double gamma_;
  Field2D frame_;
};

}  // namespace weno
