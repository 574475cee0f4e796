// Five-point reconstruction kernels: substencil fluxes, smoothness
// indicators, the global indicator, and the nonlinear weights of the
// LOC, JS5, and UD5 variants. All functions here are pure and reentrant.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace weno {

enum class Variant { Loc, Js5, Ud5 };

// Epsilon regularization: either a fixed value or dx^m resolved once per grid.
struct EpsilonPolicy {
  enum class Kind { Fixed, Scaled };
  Kind kind = Kind::Fixed;
  // Fixed: the epsilon itself. Scaled: the exponent m in eps = dx^m.
  double value = 1e-6;

  static EpsilonPolicy fixed(double v) { return {Kind::Fixed, v}; }
  static EpsilonPolicy scaled(double m) { return {Kind::Scaled, m}; }

  double resolve(double dx) const {
    return kind == Kind::Fixed ? value : std::pow(dx, value);
  }
};

struct SchemeConfig {
  Variant variant = Variant::Ud5;
  EpsilonPolicy epsilon = EpsilonPolicy::fixed(1e-16);
  double p = 2.0;
  // Euler flux splitting: use one spectral-radius bound for every
  // characteristic field instead of a per-field bound.
  bool single_alpha = false;
  // Testing hook: bypass the nonlinear weights and reconstruct with the
  // linear weights, turning every variant into the ideal upwind scheme.
  bool force_ideal = false;

  static SchemeConfig loc() { return {Variant::Loc, EpsilonPolicy::fixed(1e-5), 2.0}; }
  static SchemeConfig js5() { return {Variant::Js5, EpsilonPolicy::fixed(1e-6), 2.0}; }
  static SchemeConfig ud5() { return {Variant::Ud5, EpsilonPolicy::fixed(1e-16), 2.0}; }

  // Throws std::invalid_argument on a non-positive epsilon value,
  // non-positive scaling exponent, or p < 1.
  void validate() const;
};

inline constexpr std::array<double, 3> linear_weights = {0.1, 0.6, 0.3};

// Candidate interface values of the three 3-point substencils at i+1/2,
// from the window (f_{i-2}, f_{i-1}, f_i, f_{i+1}, f_{i+2}).
inline std::array<double, 3> substencil_fluxes(const double f[5]) {
  return {(2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0,
          (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0,
          (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0};
}

// Fifth-order upwind value at i+1/2 from the full five-point stencil;
// equals the linear-weight combination of the substencil fluxes.
inline double ideal_reconstruction(const double f[5]) {
  return (2.0 * f[0] - 13.0 * f[1] + 47.0 * f[2] + 27.0 * f[3] - 3.0 * f[4]) / 60.0;
}

// Undivided-difference indicators: beta_k = ((D1_k)^2 + (D1_{k+1})^2)/2 + (D2_k)^2.
inline std::array<double, 3> beta_loc(const double f[5]) {
  const double d1[4] = {f[1] - f[0], f[2] - f[1], f[3] - f[2], f[4] - f[3]};
  const double d2[3] = {d1[1] - d1[0], d1[2] - d1[1], d1[3] - d1[2]};
  return {0.5 * (d1[0] * d1[0] + d1[1] * d1[1]) + d2[0] * d2[0],
          0.5 * (d1[1] * d1[1] + d1[2] * d1[2]) + d2[1] * d2[1],
          0.5 * (d1[2] * d1[2] + d1[3] * d1[3]) + d2[2] * d2[2]};
}

// Classic scaled square sums of the substencil polynomial derivatives.
inline std::array<double, 3> beta_js(const double f[5]) {
  const double c = 13.0 / 12.0;
  const double a0 = f[0] - 2.0 * f[1] + f[2];
  const double b0 = f[0] - 4.0 * f[1] + 3.0 * f[2];
  const double a1 = f[1] - 2.0 * f[2] + f[3];
  const double b1 = f[1] - f[3];
  const double a2 = f[2] - 2.0 * f[3] + f[4];
  const double b2 = 3.0 * f[2] - 4.0 * f[3] + f[4];
  return {c * a0 * a0 + 0.25 * b0 * b0,
          c * a1 * a1 + 0.25 * b1 * b1,
          c * a2 * a2 + 0.25 * b2 * b2};
}

// Global indicator: magnitude of the alternating combination of squared
// second undivided differences. O(dx^6) on smooth data; zero whenever the
// three second differences have equal magnitude.
inline double zeta(const double f[5]) {
  const double a = f[0] - 2.0 * f[1] + f[2];
  const double b = f[1] - 2.0 * f[2] + f[3];
  const double c = f[2] - 2.0 * f[3] + f[4];
  return std::abs(a * a - 2.0 * b * b + c * c);
}

namespace detail {

inline double pow_p(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

inline std::array<double, 3> normalize(double a0, double a1, double a2) {
  const double inv = 1.0 / (a0 + a1 + a2);
  return {a0 * inv, a1 * inv, a2 * inv};
}

}  // namespace detail

// Inverse-indicator weights shared by the LOC and JS5 variants:
// alpha_k = d_k / (eps + beta_k)^p.
inline std::array<double, 3> weights_loc(const std::array<double, 3>& beta,
                                         double eps, double p) {
  const double a0 = linear_weights[0] / detail::pow_p(eps + beta[0], p);
  const double a1 = linear_weights[1] / detail::pow_p(eps + beta[1], p);
  const double a2 = linear_weights[2] / detail::pow_p(eps + beta[2], p);
  return detail::normalize(a0, a1, a2);
}

// Global-indicator weights: alpha_k = d_k (1 + (zeta / (beta_k + eps))^p).
inline std::array<double, 3> weights_ud5(const std::array<double, 3>& beta,
                                         double z, double eps, double p) {
  const double a0 = linear_weights[0] * (1.0 + detail::pow_p(z / (beta[0] + eps), p));
  const double a1 = linear_weights[1] * (1.0 + detail::pow_p(z / (beta[1] + eps), p));
  const double a2 = linear_weights[2] * (1.0 + detail::pow_p(z / (beta[2] + eps), p));
  return detail::normalize(a0, a1, a2);
}

inline std::array<double, 5> mirror_window(const double f[5]) {
  return {f[4], f[3], f[2], f[1], f[0]};
}

// One reconstruction kernel with the epsilon resolved for a given grid
// spacing. This is the object the solvers carry into their sweep loops.
class ReconKernel {
 public:
  ReconKernel(const SchemeConfig& cfg, double dx)
      : variant_(cfg.variant),
        eps_(cfg.epsilon.resolve(dx)),
        p_(cfg.p),
        force_ideal_(cfg.force_ideal) {
    cfg.validate();
    if (cfg.epsilon.kind == EpsilonPolicy::Kind::Scaled && !(dx > 0.0))
      throw std::invalid_argument("scaled epsilon needs dx > 0");
  }

  double epsilon() const { return eps_; }

  std::array<double, 3> weights(const double f[5]) const {
    if (force_ideal_) return linear_weights;
    switch (variant_) {
      case Variant::Loc:
        return weights_loc(beta_loc(f), eps_, p_);
      case Variant::Js5:
        return weights_loc(beta_js(f), eps_, p_);
      default:
        return weights_ud5(beta_loc(f), zeta(f), eps_, p_);
    }
  }

  double reconstruct(const double f[5]) const {
    const auto w = weights(f);
    const auto q = substencil_fluxes(f);
    return w[0] * q[0] + w[1] * q[1] + w[2] * q[2];
  }

 private:
  Variant variant_;
  double eps_;
  double p_;
  bool force_ideal_;
};

// Single-interface front end with eager input validation; the bulk solver
// paths validate whole fields per stage instead of per window.
double reconstruct_interface(const double f[5], const SchemeConfig& cfg, double dx);

const char* variant_name(Variant v);

}  // namespace weno
