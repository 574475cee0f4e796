#include "weno/euler1d.hpp"

#include <cmath>
#include <string>

#include "weno/detail/euler_sweep.hpp"

namespace weno {

Prim1D cons_to_prim(const Cons1D& q, double gamma) {
  if (!(q.rho > 0.0))
    throw AdmissibilityError("non-positive density", -1);
  Prim1D w;
  w.rho = q.rho;
  w.u = q.mom / q.rho;
  w.p = (gamma - 1.0) * (q.ene - 0.5 * q.mom * w.u);
  if (!(w.p > 0.0))
    throw AdmissibilityError("non-positive pressure", -1);
  return w;
}

Cons1D prim_to_cons(const Prim1D& w, double gamma) {
  Cons1D q;
  q.rho = w.rho;
  q.mom = w.rho * w.u;
  q.ene = w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
  return q;
}

double sound_speed(const Prim1D& w, double gamma) {
  if (!(w.rho > 0.0) || !(w.p > 0.0))
    throw AdmissibilityError("sound speed of an inadmissible state", -1);
  return std::sqrt(gamma * w.p / w.rho);
}

CharBasis interface_basis(const Cons1D& qL, const Cons1D& qR, double gamma) {
  const double l[3] = {qL.rho, qL.mom, qL.ene};
  const double r[3] = {qR.rho, qR.mom, qR.ene};
  detail::LineBasis<3> b;
  detail::roe_basis(l, r, gamma, b);
  CharBasis out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.L[i][j] = b.L[i][j];
      out.R[i][j] = b.R[i][j];
    }
  // The middle row of R is (u-c, u, u+c), which is the eigenvalue triple.
  out.lambda[0] = b.R[1][0];
  out.lambda[1] = b.R[1][1];
  out.lambda[2] = b.R[1][2];
  return out;
}

namespace {

// Audits the cell and returns (u, c); index only labels diagnostics.
inline void check_cell(const double* q, double gamma, int i,
                       const char* stage_tag, double& u, double& c) {
  if (!(std::isfinite(q[0]) && std::isfinite(q[1]) && std::isfinite(q[2])))
    throw AdmissibilityError(std::string("non-finite state") + stage_tag, i);
  if (!(q[0] > 0.0))
    throw AdmissibilityError(std::string("non-positive density") + stage_tag, i);
  u = q[1] / q[0];
  const double p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * u);
  if (!(p > 0.0))
    throw AdmissibilityError(std::string("non-positive pressure") + stage_tag, i);
  c = std::sqrt(gamma * p / q[0]);
}

}  // namespace

std::array<double, 3> wavespeed_bounds_1d(const std::vector<double>& padded,
                                          double gamma) {
  std::array<double, 3> a = {0.0, 0.0, 0.0};
  const int m = static_cast<int>(padded.size()) / 3;
  for (int i = 0; i < m; ++i) {
    double u, c;
    check_cell(&padded[3 * i], gamma, i, "", u, c);
    a[0] = std::max(a[0], std::abs(u - c));
    a[1] = std::max(a[1], std::abs(u));
    a[2] = std::max(a[2], std::abs(u + c));
  }
  return a;
}

double spectral_radius_1d(const std::vector<double>& state, double gamma) {
  double a = 0.0;
  const int m = static_cast<int>(state.size()) / 3;
  for (int i = 0; i < m; ++i) {
    double u, c;
    check_cell(&state[3 * i], gamma, i, "", u, c);
    a = std::max(a, std::abs(u) + c);
  }
  return a;
}

void euler1d_rhs(const EulerState1D& interior, const SchemeConfig& cfg,
                 BoundaryKind bc, double dx, EulerState1D& rhs,
                 const char* stage_tag, double gamma) {
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

  std::array<double, 3> alpha;
  try {
    alpha = wavespeed_bounds_1d(padded, gamma);
  } catch (const AdmissibilityError& e) {
    throw AdmissibilityError(std::string(e.what()) + stage_tag, e.i - g);
  }
  if (cfg.single_alpha) {
    // |u| + c = max(|u-c|, |u+c|) pointwise, so the spectral radius is the
    // larger of the acoustic bounds.
    const double a = std::max(alpha[0], alpha[2]);
    alpha = {a, a, a};
  }

  const ReconKernel kernel(cfg, dx);
  std::vector<double> fhat((n + 1) * 3);
  detail::sweep_line<3>(padded.data(), n, kernel, alpha.data(), gamma,
                        fhat.data());

  rhs.resize(interior.size());
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) {
      const double v = -(fhat[(i + 1) * 3 + c] - fhat[i * 3 + c]) / dx;
      if (!std::isfinite(v))
        throw AdmissibilityError(
            std::string("non-finite right-hand side") + stage_tag, i);
      rhs[i * 3 + c] = v;
    }
}

}  // namespace weno
