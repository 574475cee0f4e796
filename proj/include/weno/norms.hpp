// Error norms and convergence-table rows.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace weno {

struct Norms {
  double l1 = 0.0;
  double linf = 0.0;
};

// L1 is the mean absolute error (1/N sum |e_i|), Linf the max absolute error.
inline Norms error_norms(const std::vector<double>& numeric,
                         const std::vector<double>& exact) {
  if (numeric.size() != exact.size())
    throw std::invalid_argument("error_norms: length mismatch");
  Norms out;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double e = std::abs(numeric[i] - exact[i]);
    out.l1 += e;
    out.linf = std::max(out.linf, e);
  }
  out.l1 /= static_cast<double>(numeric.size());
  return out;
}

struct ConvergenceRow {
  int n = 0;
  double l1_error = 0.0;
  double l1_order = std::nan("");
  double linf_error = 0.0;
  double linf_order = std::nan("");
};

// order = log2(e(dx) / e(dx/2)) between consecutive dyadic rows.
inline double deduced_order(double coarse, double fine) {
  return std::log2(coarse / fine);
}

}  // namespace weno
