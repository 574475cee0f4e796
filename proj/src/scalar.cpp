#include "weno/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace weno {

void fill_ghosts(ScalarField& u, BoundaryKind bc) {
  const int n = u.n;
  const int g = u.g;
  for (int k = 0; k < g; ++k) {
    if (bc == BoundaryKind::Periodic) {
      u.at(-1 - k) = u.at(n - 1 - k);
      u.at(n + k) = u.at(k);
    } else {
      u.at(-1 - k) = u.at(0);
      u.at(n + k) = u.at(n - 1);
    }
  }
}

double compute_alpha(const ScalarField& u, const ScalarFn& dflux) {
  double a = 0.0;
  for (int i = -u.g; i < u.n + u.g; ++i)
    a = std::max(a, std::abs(dflux(u.at(i))));
  return a;
}

void split_flux(const ScalarField& u, const ScalarFn& flux, double alpha,
                ScalarField& f_plus, ScalarField& f_minus) {
  if (f_plus.n != u.n || f_plus.g != u.g) f_plus = ScalarField(u.n, u.g);
  if (f_minus.n != u.n || f_minus.g != u.g) f_minus = ScalarField(u.n, u.g);
  for (int i = -u.g; i < u.n + u.g; ++i) {
    const double fi = flux(u.at(i));
    const double ui = u.at(i);
    f_plus.at(i) = 0.5 * (fi + alpha * ui);
    f_minus.at(i) = 0.5 * (fi - alpha * ui);
  }
}

// Interface k in [0, n] sits at node x_k, between cells k-1 and k. With
// ghost width 3 its upwind window starts at padded index k and the mirrored
// downwind window at padded index k+1.
void scalar_rhs(ScalarField& u, const ReconKernel& kernel, double dx,
                BoundaryKind bc, const ScalarFn& flux, const ScalarFn& dflux,
                std::vector<double>& rhs) {
  const int n = u.n;
  fill_ghosts(u, bc);
  const double alpha = compute_alpha(u, dflux);

  ScalarField fp(n), fm(n);
  split_flux(u, flux, alpha, fp, fm);

  std::vector<double> fhat(n + 1);
#pragma omp parallel for schedule(static)
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

}  // namespace weno
