// 1D compressible Euler right-hand side with characteristic-wise
// reconstruction and componentwise global Lax-Friedrichs splitting.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "weno/grid.hpp"
#include "weno/stencil.hpp"

namespace weno {

inline constexpr double gamma_default = 1.4;

// Raised when a state loses positive density or pressure, or when an
// interface average becomes inadmissible. Carries the offending location.
class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(const std::string& what, int i_, int j_ = -1)
      : std::runtime_error(what), i(i_), j(j_) {}
  int i;
  int j;
};

struct Cons1D {
  double rho = 0.0;
  double mom = 0.0;
  double ene = 0.0;
};

struct Prim1D {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

Prim1D cons_to_prim(const Cons1D& q, double gamma = gamma_default);
Cons1D prim_to_cons(const Prim1D& w, double gamma = gamma_default);
double sound_speed(const Prim1D& w, double gamma = gamma_default);

// Left/right eigenvector matrices and eigenvalues (u-c, u, u+c) of the flux
// Jacobian at the Roe average of the two states; L * R is the identity.
struct CharBasis {
  double L[3][3];
  double R[3][3];
  double lambda[3];
};

CharBasis interface_basis(const Cons1D& qL, const Cons1D& qR,
                          double gamma = gamma_default);

// Conserved field stored flat as (rho, mom, ene) per cell.
using EulerState1D = std::vector<double>;

inline EulerState1D pack_state(const std::vector<Cons1D>& cells) {
  EulerState1D out(cells.size() * 3);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out[3 * i] = cells[i].rho;
    out[3 * i + 1] = cells[i].mom;
    out[3 * i + 2] = cells[i].ene;
  }
  return out;
}

// Per-characteristic-field wave-speed bounds (max |lambda_k| over the padded
// field) and the single spectral-radius bound max(|u| + c).
std::array<double, 3> wavespeed_bounds_1d(const std::vector<double>& padded,
                                          double gamma = gamma_default);
double spectral_radius_1d(const std::vector<double>& state,
                          double gamma = gamma_default);

// RHS = -(fhat_{i+1/2} - fhat_{i-1/2}) / dx on the interior; fills ghosts,
// verifies admissibility of the padded field, projects each interface window
// onto the Roe-average characteristic fields, splits with per-field (or
// single) alpha bounds, and reconstructs with the configured kernel.
// stage_tag appears in admissibility diagnostics.
void euler1d_rhs(const EulerState1D& interior, const SchemeConfig& cfg,
                 BoundaryKind bc, double dx, EulerState1D& rhs,
                 const char* stage_tag = "", double gamma = gamma_default);

}  // namespace weno
