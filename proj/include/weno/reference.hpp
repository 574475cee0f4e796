// Serial reference right-hand sides. They share the per-interface math with
// the production kernels but orchestrate it in plain single-threaded loops,
// so parity tests and benchmarks can compare against them.
#pragma once

#include "weno/euler1d.hpp"
#include "weno/euler2d.hpp"
#include "weno/scalar.hpp"

namespace weno::ref {

void scalar_rhs(ScalarField& u, const ReconKernel& kernel, double dx,
                BoundaryKind bc, const ScalarFn& flux, const ScalarFn& dflux,
                std::vector<double>& rhs);

void euler1d_rhs(const EulerState1D& interior, const SchemeConfig& cfg,
                 BoundaryKind bc, double dx, EulerState1D& rhs,
                 double gamma = gamma_default);

class Euler2DRef {
 public:
  Euler2DRef(const Grid2D& grid, const SchemeConfig& cfg, GhostFiller fill,
             double gamma = gamma_default);

  void rhs(const EulerState2D& interior, double t, EulerState2D& out);

 private:
  Grid2D grid_;
  SchemeConfig cfg_;
  GhostFiller fill_;
  double gamma_;
  Field2D frame_;
};

}  // namespace weno::ref
