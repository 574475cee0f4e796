// Catalog of every benchmark configuration the harness can run: initial
// data, exact solutions where available, domains, final times, boundary
// conditions, and default grid sizes.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weno/euler1d.hpp"
#include "weno/euler2d.hpp"
#include "weno/grid.hpp"

namespace weno {

enum class ProblemKind { ScalarAdvection, ReconstructionOnly, Euler1D, Euler2D };

struct ProblemSpec {
  std::string name;
  ProblemKind kind = ProblemKind::ScalarAdvection;
  int dim = 1;
  double x_lo = -1.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 0.0;
  double t_end = 0.0;
  int default_n = 0;
  int default_ny = 0;
  BoundaryKind bc = BoundaryKind::Periodic;

  std::function<double(double)> scalar_init;
  std::function<double(double, double)> scalar_exact;  // (x, t); null if none
  std::function<Prim1D(double)> euler_init;
  std::function<Prim2D(double, double)> euler2d_init;

  // Key=value description of the non-functional fields; parses back into an
  // equal description (the serialization round-trip contract).
  std::string describe() const;
};

// Gaussian-plus-square-wave profile; delta controls the Gaussian blend
// spacing. The catalog entry uses delta = 0.005.
std::function<double(double)> composite_wave_profile(double delta);

// Returns the immutable catalog entry; throws std::invalid_argument naming
// the available entries when the name is unknown.
const ProblemSpec& catalog_lookup(const std::string& name);

std::vector<std::string> catalog_names();

// Mach-10 oblique-shock constants for the Mach-reflection problem, derived
// from the normal-shock relations (derivation in problems.cpp).
struct DmrSetup {
  Prim2D pre;
  Prim2D post;
  double wall_start = 1.0 / 6.0;  // reflecting wall begins here on y = 0
  MovingShockParams shock;        // top-edge trace of the oblique shock
};

const DmrSetup& dmr_setup();

// Ghost fill for the Mach-reflection domain: post-shock Dirichlet ahead of
// the wall start on the bottom, reflecting wall after it, inflow left,
// outflow right, and the moving oblique-shock split on top.
void dmr_boundary_fill(Field2D& q, double t, const DmrSetup& setup,
                       const Grid2D& grid);

GhostFiller make_dmr_filler(const Grid2D& grid);

}  // namespace weno
