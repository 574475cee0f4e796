// Uniform-grid descriptions and ghost-padded scalar storage.
#pragma once

#include <stdexcept>
#include <vector>

namespace weno {

// Ghost width is pinned to the five-point stencil requirement. Wider ghosts
// are rejected rather than accepted, so an index bug cannot hide in unused
// padding.
inline constexpr int ghost_width = 3;

struct GridSpec {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int n = 10;
  int ghost = ghost_width;

  GridSpec() = default;
  GridSpec(double lo, double hi, int cells, int ghost_cells = ghost_width)
      : x_lo(lo), x_hi(hi), n(cells), ghost(ghost_cells) {
    if (!(x_hi > x_lo)) throw std::invalid_argument("grid needs x_hi > x_lo");
    if (n < 10) throw std::invalid_argument("grid needs at least 10 cells");
    if (ghost != ghost_width)
      throw std::invalid_argument("ghost width must be exactly 3");
  }

  double dx() const { return (x_hi - x_lo) / n; }
  double cell_center(int i) const { return x_lo + (i + 0.5) * dx(); }
  double node(int i) const { return x_lo + i * dx(); }
};

enum class BoundaryKind { Periodic, ZeroGradient };

// Interior values plus ghost extension; index i runs over [-g, n+g).
struct ScalarField {
  int n = 0;
  int g = ghost_width;
  std::vector<double> data;

  ScalarField() = default;
  ScalarField(int interior, int ghosts = ghost_width)
      : n(interior), g(ghosts), data(interior + 2 * ghosts, 0.0) {}

  double& at(int i) { return data[i + g]; }
  double at(int i) const { return data[i + g]; }
  int size() const { return n; }
};

void fill_ghosts(ScalarField& u, BoundaryKind bc);

}  // namespace weno
