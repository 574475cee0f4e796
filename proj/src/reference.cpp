#include "weno/reference.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "weno/detail/euler_sweep.hpp"

namespace weno::ref {

void scalar_rhs(ScalarField& u, const ReconKernel& kernel, double dx,
                BoundaryKind bc, const ScalarFn& flux, const ScalarFn& dflux,
                std::vector<double>& rhs) {
  const int n = u.n;
  fill_ghosts(u, bc);
  const double alpha = compute_alpha(u, dflux);

  ScalarField fp(n), fm(n);
  split_flux(u, flux, alpha, fp, fm);

  std::vector<double> fhat(n + 1);
  for (int k = 0; k <= n; ++k) {
    const auto rev = mirror_window(&fm.data[k + 1]);
    fhat[k] = kernel.reconstruct(&fp.data[k]) + kernel.reconstruct(rev.data());
  }

  rhs.resize(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = -(fhat[i + 1] - fhat[i]) / dx;
    if (!std::isfinite(rhs[i]))
      throw std::domain_error("non-finite scalar right-hand side at cell " +
                              std::to_string(i));
  }
}

void euler1d_rhs(const EulerState1D& interior, const SchemeConfig& cfg,
                 BoundaryKind bc, double dx, EulerState1D& rhs, double gamma) {
  const int g = ghost_width;
  const int n = static_cast<int>(interior.size()) / 3;

  std::vector<double> padded((n + 2 * g) * 3);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) padded[(i + g) * 3 + c] = interior[i * 3 + c];
  for (int k = 0; k < g; ++k)
    for (int c = 0; c < 3; ++c) {
      const int lo = bc == BoundaryKind::Periodic ? n - 1 - k : 0;
      const int hi = bc == BoundaryKind::Periodic ? k : n - 1;
      padded[(g - 1 - k) * 3 + c] = interior[lo * 3 + c];
      padded[(n + g + k) * 3 + c] = interior[hi * 3 + c];
    }

  std::array<double, 3> alpha = wavespeed_bounds_1d(padded, gamma);
  if (cfg.single_alpha) {
    const double a = std::max(alpha[0], alpha[2]);
    alpha = {a, a, a};
  }

  const ReconKernel kernel(cfg, dx);
  std::vector<double> fhat((n + 1) * 3);
  detail::sweep_line_serial<3>(padded.data(), n, kernel, alpha.data(), gamma,
                               fhat.data());

  rhs.resize(interior.size());
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c)
      rhs[i * 3 + c] = -(fhat[(i + 1) * 3 + c] - fhat[i * 3 + c]) / dx;
}

Euler2DRef::Euler2DRef(const Grid2D& grid, const SchemeConfig& cfg,
                       GhostFiller fill, double gamma)
    : grid_(grid),
      cfg_(cfg),
      fill_(std::move(fill)),
      gamma_(gamma),
      frame_(grid.nx, grid.ny) {
  cfg_.validate();
}

void Euler2DRef::rhs(const EulerState2D& interior, double t,
                     EulerState2D& out) {
  const int nx = grid_.nx, ny = grid_.ny, g = ghost_width;
  const double dx = grid_.dx(), dy = grid_.dy();

  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int c = 0; c < 4; ++c)
        frame_(i, j, c) = interior[(i * ny + j) * 4 + c];
  fill_(frame_, t);

  double ax[3] = {0.0, 0.0, 0.0};
  double ay[3] = {0.0, 0.0, 0.0};
  for (int i = -g; i < nx + g; ++i)
    for (int j = -g; j < ny + g; ++j) {
      const double rho = frame_(i, j, 0);
      const double u = frame_(i, j, 1) / rho;
      const double v = frame_(i, j, 2) / rho;
      const double p =
          (gamma_ - 1.0) *
          (frame_(i, j, 3) - 0.5 * rho * (u * u + v * v));
      if (!(rho > 0.0) || !(p > 0.0))
        throw AdmissibilityError("inadmissible state", i, j);
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

  std::vector<double> line((std::max(nx, ny) + 2 * g) * 4);
  std::vector<double> flux((std::max(nx, ny) + 1) * 4);

  for (int j = 0; j < ny; ++j) {
    for (int ii = -g; ii < nx + g; ++ii)
      for (int c = 0; c < 4; ++c) line[(ii + g) * 4 + c] = frame_(ii, j, c);
    detail::sweep_line_serial<4>(line.data(), nx, kernel_x, alpha_x, gamma_,
                                 flux.data());
    for (int i = 0; i < nx; ++i)
      for (int c = 0; c < 4; ++c)
        out[(i * ny + j) * 4 + c] =
            -(flux[(i + 1) * 4 + c] - flux[i * 4 + c]) / dx;
  }

  for (int i = 0; i < nx; ++i) {
    for (int jj = -g; jj < ny + g; ++jj) {
      const int base = (jj + g) * 4;
      line[base + 0] = frame_(i, jj, 0);
      line[base + 1] = frame_(i, jj, 2);
      line[base + 2] = frame_(i, jj, 1);
      line[base + 3] = frame_(i, jj, 3);
    }
    detail::sweep_line_serial<4>(line.data(), ny, kernel_y, alpha_y, gamma_,
                                 flux.data());
    for (int j = 0; j < ny; ++j) {
      const int o = (i * ny + j) * 4;
      out[o + 0] -= (flux[(j + 1) * 4 + 0] - flux[j * 4 + 0]) / dy;
      out[o + 1] -= (flux[(j + 1) * 4 + 2] - flux[j * 4 + 2]) / dy;
      out[o + 2] -= (flux[(j + 1) * 4 + 1] - flux[j * 4 + 1]) / dy;
      out[o + 3] -= (flux[(j + 1) * 4 + 3] - flux[j * 4 + 3]) / dy;
    }
  }
}

}  // namespace weno::ref
