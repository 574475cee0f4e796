#include "weno/euler2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "weno/detail/euler_sweep.hpp"

namespace weno {

Prim2D cons_to_prim(const Cons2D& q, double gamma) {
  if (!(q.rho > 0.0))
    throw AdmissibilityError("non-positive density", -1);
  Prim2D w;
  w.rho = q.rho;
  w.u = q.momx / q.rho;
  w.v = q.momy / q.rho;
  w.p = (gamma - 1.0) * (q.ene - 0.5 * (q.momx * w.u + q.momy * w.v));
  if (!(w.p > 0.0))
    throw AdmissibilityError("non-positive pressure", -1);
  return w;
}

Cons2D prim_to_cons(const Prim2D& w, double gamma) {
  Cons2D q;
  q.rho = w.rho;
  q.momx = w.rho * w.u;
  q.momy = w.rho * w.v;
  q.ene = w.p / (gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
  return q;
}

void Boundary2D::validate() const {
  if (left.kind == EdgeKind::MovingShockTop ||
      right.kind == EdgeKind::MovingShockTop ||
      bottom.kind == EdgeKind::MovingShockTop)
    throw std::invalid_argument("moving-shock condition only fits the top edge");
}

namespace {

inline void put(Field2D& q, int i, int j, const Cons2D& s) {
  q(i, j, 0) = s.rho;
  q(i, j, 1) = s.momx;
  q(i, j, 2) = s.momy;
  q(i, j, 3) = s.ene;
}

}  // namespace

void fill_boundary2d(Field2D& q, const Grid2D& grid, const Boundary2D& bc,
                     const Field2D& frozen, double t) {
  const int nx = grid.nx, ny = grid.ny, g = ghost_width;

  for (int j = 0; j < ny; ++j)
    for (int k = 0; k < g; ++k) {
      switch (bc.left.kind) {
        case EdgeKind::Dirichlet:
          for (int c = 0; c < 4; ++c) q(-1 - k, j, c) = frozen(-1 - k, j, c);
          break;
        case EdgeKind::Reflecting:
          for (int c = 0; c < 4; ++c) q(-1 - k, j, c) = q(k, j, c);
          q(-1 - k, j, 1) = -q(-1 - k, j, 1);
          break;
        case EdgeKind::Inflow:
          put(q, -1 - k, j, bc.left.state);
          break;
        default:
          for (int c = 0; c < 4; ++c) q(-1 - k, j, c) = q(0, j, c);
      }
      switch (bc.right.kind) {
        case EdgeKind::Dirichlet:
          for (int c = 0; c < 4; ++c) q(nx + k, j, c) = frozen(nx + k, j, c);
          break;
        case EdgeKind::Reflecting:
          for (int c = 0; c < 4; ++c) q(nx + k, j, c) = q(nx - 1 - k, j, c);
          q(nx + k, j, 1) = -q(nx + k, j, 1);
          break;
        case EdgeKind::Inflow:
          put(q, nx + k, j, bc.right.state);
          break;
        default:
          for (int c = 0; c < 4; ++c) q(nx + k, j, c) = q(nx - 1, j, c);
      }
    }

  for (int i = -g; i < nx + g; ++i)
    for (int k = 0; k < g; ++k) {
      switch (bc.bottom.kind) {
        case EdgeKind::Dirichlet:
          for (int c = 0; c < 4; ++c) q(i, -1 - k, c) = frozen(i, -1 - k, c);
          break;
        case EdgeKind::Reflecting:
          for (int c = 0; c < 4; ++c) q(i, -1 - k, c) = q(i, k, c);
          q(i, -1 - k, 2) = -q(i, -1 - k, 2);
          break;
        case EdgeKind::Inflow:
          put(q, i, -1 - k, bc.bottom.state);
          break;
        default:
          for (int c = 0; c < 4; ++c) q(i, -1 - k, c) = q(i, 0, c);
      }
      switch (bc.top.kind) {
        case EdgeKind::Dirichlet:
          for (int c = 0; c < 4; ++c) q(i, ny + k, c) = frozen(i, ny + k, c);
          break;
        case EdgeKind::Reflecting:
          for (int c = 0; c < 4; ++c) q(i, ny + k, c) = q(i, ny - 1 - k, c);
          q(i, ny + k, 2) = -q(i, ny + k, 2);
          break;
        case EdgeKind::Inflow:
          put(q, i, ny + k, bc.top.state);
          break;
        case EdgeKind::MovingShockTop: {
          const double split = bc.shock.split_x(grid.yc(ny + k), t);
          put(q, i, ny + k, grid.xc(i) < split ? bc.shock.post : bc.shock.pre);
          break;
        }
        default:
          for (int c = 0; c < 4; ++c) q(i, ny + k, c) = q(i, ny - 1, c);
      }
    }
}

GhostFiller make_boundary_filler(const Grid2D& grid, const Boundary2D& bc,
                                 const Field2D& frozen) {
  bc.validate();
  return [grid, bc, frozen](Field2D& q, double t) {
    fill_boundary2d(q, grid, bc, frozen, t);
  };
}

Euler2DSolver::Euler2DSolver(const Grid2D& grid, const SchemeConfig& cfg,
                             GhostFiller fill, double gamma)
    : grid_(grid),
      cfg_(cfg),
      fill_(std::move(fill)),
      gamma_(gamma),
      frame_(grid.nx, grid.ny) {
  cfg_.validate();
}

void Euler2DSolver::rhs(const EulerState2D& interior, double t,
                        EulerState2D& out, const char* stage_tag) {
  const int nx = grid_.nx, ny = grid_.ny, g = ghost_width;
  const double dx = grid_.dx(), dy = grid_.dy();

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int c = 0; c < 4; ++c)
        frame_(i, j, c) = interior[(i * ny + j) * 4 + c];
  fill_(frame_, t);

  // One audit pass over the padded frame also collects the per-field
  // wave-speed bounds of both sweep directions.
  double ax[3] = {0.0, 0.0, 0.0};
  double ay[3] = {0.0, 0.0, 0.0};
  for (int i = -g; i < nx + g; ++i)
    for (int j = -g; j < ny + g; ++j) {
      const double rho = frame_(i, j, 0);
      const double mx = frame_(i, j, 1);
      const double my = frame_(i, j, 2);
      const double en = frame_(i, j, 3);
      if (!(std::isfinite(rho) && std::isfinite(mx) && std::isfinite(my) &&
            std::isfinite(en)))
        throw AdmissibilityError(std::string("non-finite state") + stage_tag,
                                 i, j);
      if (!(rho > 0.0))
        throw AdmissibilityError(
            std::string("non-positive density") + stage_tag, i, j);
      const double u = mx / rho, v = my / rho;
      const double p = (gamma_ - 1.0) * (en - 0.5 * (mx * u + my * v));
      if (!(p > 0.0))
        throw AdmissibilityError(
            std::string("non-positive pressure") + stage_tag, i, j);
      const double c = std::sqrt(gamma_ * p / rho);
      ax[0] = std::max(ax[0], std::abs(u - c));
      ax[1] = std::max(ax[1], std::abs(u));
      ax[2] = std::max(ax[2], std::abs(u + c));
      ay[0] = std::max(ay[0], std::abs(v - c));
      ay[1] = std::max(ay[1], std::abs(v));
      ay[2] = std::max(ay[2], std::abs(v + c));
    }
  double alpha_x[4] = {ax[0], ax[1], ax[1], ax[2]};
  double alpha_y[4] = {ay[0], ay[1], ay[1], ay[2]};
  if (cfg_.single_alpha) {
    const double sx = std::max(ax[0], ax[2]);
    const double sy = std::max(ay[0], ay[2]);
    for (int c = 0; c < 4; ++c) {
      alpha_x[c] = sx;
      alpha_y[c] = sy;
    }
  }

  const ReconKernel kernel_x(cfg_, dx);
  const ReconKernel kernel_y(cfg_, dy);
  out.assign(interior.size(), 0.0);

  const int line_cap = (std::max(nx, ny) + 2 * g) * 4;
  const int flux_cap = (std::max(nx, ny) + 1) * 4;
  int bad_line = -1, bad_i = 0, bad_j = 0;

#pragma omp parallel
  {
    std::vector<double> line(line_cap), flux(flux_cap);

#pragma omp for schedule(static)
    for (int j = 0; j < ny; ++j) {
      for (int ii = -g; ii < nx + g; ++ii)
        for (int c = 0; c < 4; ++c) line[(ii + g) * 4 + c] = frame_(ii, j, c);
      try {
        detail::sweep_line_serial<4>(line.data(), nx, kernel_x, alpha_x,
                                     gamma_, flux.data());
      } catch (const AdmissibilityError& e) {
#pragma omp critical
        if (bad_line < 0 || j < bad_line) {
          bad_line = j;
          bad_i = e.i;
          bad_j = j;
        }
        continue;
      }
      for (int i = 0; i < nx; ++i)
        for (int c = 0; c < 4; ++c)
          out[(i * ny + j) * 4 + c] =
              -(flux[(i + 1) * 4 + c] - flux[i * 4 + c]) / dx;
    }

    // The y direction runs the same line kernel on component-swapped lines
    // (rho, momy, momx, ene), so mirror-symmetric data stays bit symmetric.
#pragma omp for schedule(static)
    for (int i = 0; i < nx; ++i) {
      for (int jj = -g; jj < ny + g; ++jj) {
        const int base = (jj + g) * 4;
        line[base + 0] = frame_(i, jj, 0);
        line[base + 1] = frame_(i, jj, 2);
        line[base + 2] = frame_(i, jj, 1);
        line[base + 3] = frame_(i, jj, 3);
      }
      try {
        detail::sweep_line_serial<4>(line.data(), ny, kernel_y, alpha_y,
                                     gamma_, flux.data());
      } catch (const AdmissibilityError& e) {
#pragma omp critical
        if (bad_line < 0 || i < bad_line) {
          bad_line = i;
          bad_i = i;
          bad_j = e.i;
        }
        continue;
      }
      for (int j = 0; j < ny; ++j) {
        const int o = (i * ny + j) * 4;
        out[o + 0] -= (flux[(j + 1) * 4 + 0] - flux[j * 4 + 0]) / dy;
        out[o + 1] -= (flux[(j + 1) * 4 + 2] - flux[j * 4 + 2]) / dy;
        out[o + 2] -= (flux[(j + 1) * 4 + 1] - flux[j * 4 + 1]) / dy;
        out[o + 3] -= (flux[(j + 1) * 4 + 3] - flux[j * 4 + 3]) / dy;
      }
    }
  }

  if (bad_line >= 0)
    throw AdmissibilityError(
        std::string("inadmissible interface average state") + stage_tag, bad_i,
        bad_j);

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int c = 0; c < 4; ++c)
        if (!std::isfinite(out[(i * ny + j) * 4 + c]))
          throw AdmissibilityError(
              std::string("non-finite right-hand side") + stage_tag, i, j);
}

std::pair<double, double> Euler2DSolver::speed_bounds(
    const EulerState2D& interior) const {
  const int nx = grid_.nx, ny = grid_.ny;
  double axm = 0.0, aym = 0.0;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      const double* q = &interior[(i * ny + j) * 4];
      if (!(q[0] > 0.0))
        throw AdmissibilityError("non-positive density", i, j);
      const double u = q[1] / q[0], v = q[2] / q[0];
      const double p = (gamma_ - 1.0) * (q[3] - 0.5 * (q[1] * u + q[2] * v));
      if (!(p > 0.0)) throw AdmissibilityError("non-positive pressure", i, j);
      const double c = std::sqrt(gamma_ * p / q[0]);
      axm = std::max(axm, std::abs(u) + c);
      aym = std::max(aym, std::abs(v) + c);
    }
  return {axm, aym};
}

}  // namespace weno
