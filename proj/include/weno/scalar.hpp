// Method-of-lines right-hand side for 1D scalar conservation laws with
// global Lax-Friedrichs flux splitting.
#pragma once

#include <functional>
#include <vector>

#include "weno/grid.hpp"
#include "weno/stencil.hpp"

namespace weno {

using ScalarFn = std::function<double(double)>;

// Max of |dflux(u_i)| over interior and ghost nodes; deterministic reduction.
double compute_alpha(const ScalarField& u, const ScalarFn& dflux);

// Pointwise split f_pm = (f(u) +- alpha u) / 2, so f_plus + f_minus
// reproduces f(u) up to one rounding.
void split_flux(const ScalarField& u, const ScalarFn& flux, double alpha,
                ScalarField& f_plus, ScalarField& f_minus);

// L(u)_i = -(fhat_{i+1/2} - fhat_{i-1/2}) / dx. Fills the ghosts of u in
// place, splits with the freshest alpha bound, reconstructs the upwind part
// on forward windows and the downwind part on mirrored windows. Throws
// std::domain_error when the result is not finite.
void scalar_rhs(ScalarField& u, const ReconKernel& kernel, double dx,
                BoundaryKind bc, const ScalarFn& flux, const ScalarFn& dflux,
                std::vector<double>& rhs);

}  // namespace weno
