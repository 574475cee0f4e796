// Shared characteristic-wise line sweep for the Euler solvers. NC = 3 runs
// the 1D system; NC = 4 runs one grid line of the 2D system with the first
// momentum component along the sweep and the second transverse to it.
#pragma once

#include <cmath>

#include "weno/euler1d.hpp"
#include "weno/stencil.hpp"

namespace weno::detail {

template <int NC>
struct LineBasis {
  double L[NC][NC];
  double R[NC][NC];
};

// Roe-average eigenbasis for the 1D system (rho, mom, ene).
inline void roe_basis(const double* qL, const double* qR, double gamma,
                      LineBasis<3>& b) {
  const double rhoL = qL[0], rhoR = qR[0];
  const double uL = qL[1] / rhoL, uR = qR[1] / rhoR;
  const double pL = (gamma - 1.0) * (qL[2] - 0.5 * rhoL * uL * uL);
  const double pR = (gamma - 1.0) * (qR[2] - 0.5 * rhoR * uR * uR);
  const double HL = (qL[2] + pL) / rhoL, HR = (qR[2] + pR) / rhoR;
  const double sL = std::sqrt(rhoL), sR = std::sqrt(rhoR);
  const double inv = 1.0 / (sL + sR);
  const double u = (sL * uL + sR * uR) * inv;
  const double H = (sL * HL + sR * HR) * inv;
  const double c2 = (gamma - 1.0) * (H - 0.5 * u * u);
  if (!(c2 > 0.0))
    throw AdmissibilityError("inadmissible interface average state", -1);
  const double c = std::sqrt(c2);
  const double b1 = (gamma - 1.0) / c2;
  const double b2 = 0.5 * b1 * u * u;

  b.R[0][0] = 1.0;        b.R[0][1] = 1.0;         b.R[0][2] = 1.0;
  b.R[1][0] = u - c;      b.R[1][1] = u;           b.R[1][2] = u + c;
  b.R[2][0] = H - u * c;  b.R[2][1] = 0.5 * u * u; b.R[2][2] = H + u * c;

  b.L[0][0] = 0.5 * (b2 + u / c);
  b.L[0][1] = -0.5 * (b1 * u + 1.0 / c);
  b.L[0][2] = 0.5 * b1;
  b.L[1][0] = 1.0 - b2;
  b.L[1][1] = b1 * u;
  b.L[1][2] = -b1;
  b.L[2][0] = 0.5 * (b2 - u / c);
  b.L[2][1] = -0.5 * (b1 * u - 1.0 / c);
  b.L[2][2] = 0.5 * b1;
}

// Roe-average eigenbasis for one 2D line (rho, momn, momt, ene); the
// transverse velocity rides along as a passive field with eigenvalue u.
inline void roe_basis(const double* qL, const double* qR, double gamma,
                      LineBasis<4>& b) {
  const double rhoL = qL[0], rhoR = qR[0];
  const double uL = qL[1] / rhoL, uR = qR[1] / rhoR;
  const double vL = qL[2] / rhoL, vR = qR[2] / rhoR;
  const double pL = (gamma - 1.0) * (qL[3] - 0.5 * rhoL * (uL * uL + vL * vL));
  const double pR = (gamma - 1.0) * (qR[3] - 0.5 * rhoR * (uR * uR + vR * vR));
  const double HL = (qL[3] + pL) / rhoL, HR = (qR[3] + pR) / rhoR;
  const double sL = std::sqrt(rhoL), sR = std::sqrt(rhoR);
  const double inv = 1.0 / (sL + sR);
  const double u = (sL * uL + sR * uR) * inv;
  const double v = (sL * vL + sR * vR) * inv;
  const double H = (sL * HL + sR * HR) * inv;
  const double q2 = u * u + v * v;
  const double c2 = (gamma - 1.0) * (H - 0.5 * q2);
  if (!(c2 > 0.0))
    throw AdmissibilityError("inadmissible interface average state", -1);
  const double c = std::sqrt(c2);
  const double b1 = (gamma - 1.0) / c2;
  const double b2 = 0.5 * b1 * q2;

  b.R[0][0] = 1.0;       b.R[0][1] = 1.0;      b.R[0][2] = 0.0; b.R[0][3] = 1.0;
  b.R[1][0] = u - c;     b.R[1][1] = u;        b.R[1][2] = 0.0; b.R[1][3] = u + c;
  b.R[2][0] = v;         b.R[2][1] = v;        b.R[2][2] = 1.0; b.R[2][3] = v;
  b.R[3][0] = H - u * c; b.R[3][1] = 0.5 * q2; b.R[3][2] = v;   b.R[3][3] = H + u * c;

  b.L[0][0] = 0.5 * (b2 + u / c);
  b.L[0][1] = -0.5 * (b1 * u + 1.0 / c);
  b.L[0][2] = -0.5 * b1 * v;
  b.L[0][3] = 0.5 * b1;
  b.L[1][0] = 1.0 - b2;
  b.L[1][1] = b1 * u;
  b.L[1][2] = b1 * v;
  b.L[1][3] = -b1;
  b.L[2][0] = -v;
  b.L[2][1] = 0.0;
  b.L[2][2] = 1.0;
  b.L[2][3] = 0.0;
  b.L[3][0] = 0.5 * (b2 - u / c);
  b.L[3][1] = -0.5 * (b1 * u - 1.0 / c);
  b.L[3][2] = -0.5 * b1 * v;
  b.L[3][3] = 0.5 * b1;
}

template <int NC>
inline void point_flux(const double* q, double gamma, double* f) {
  if constexpr (NC == 3) {
    const double u = q[1] / q[0];
    const double p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * u);
    f[0] = q[1];
    f[1] = q[1] * u + p;
    f[2] = u * (q[2] + p);
  } else {
    const double u = q[1] / q[0];
    const double v = q[2] / q[0];
    const double p = (gamma - 1.0) * (q[3] - 0.5 * (q[1] * u + q[2] * v));
    f[0] = q[1];
    f[1] = q[1] * u + p;
    f[2] = q[1] * v;
    f[3] = u * (q[3] + p);
  }
}

// Numerical flux at one interface from the six surrounding cells (window
// base w6 = padded line + k*NC for interface index k in [0, n]).
template <int NC>
inline void interface_flux(const double* w6, const ReconKernel& kernel,
                           const double* alpha, double gamma, double* fhat) {
  LineBasis<NC> b;
  roe_basis(w6 + 2 * NC, w6 + 3 * NC, gamma, b);

  double wch[6][NC];
  double gch[6][NC];
  for (int m = 0; m < 6; ++m) {
    const double* q = w6 + m * NC;
    double f[NC];
    point_flux<NC>(q, gamma, f);
    for (int c = 0; c < NC; ++c) {
      double ws = 0.0, gs = 0.0;
      for (int e = 0; e < NC; ++e) {
        ws += b.L[c][e] * q[e];
        gs += b.L[c][e] * f[e];
      }
      wch[m][c] = ws;
      gch[m][c] = gs;
    }
  }

  double ghat[NC];
  for (int c = 0; c < NC; ++c) {
    double plus[5], minus[5];
    for (int m = 0; m < 5; ++m)
      plus[m] = 0.5 * (gch[m][c] + alpha[c] * wch[m][c]);
    for (int m = 0; m < 5; ++m)
      minus[m] = 0.5 * (gch[5 - m][c] - alpha[c] * wch[5 - m][c]);
    ghat[c] = kernel.reconstruct(plus) + kernel.reconstruct(minus);
  }

  for (int c = 0; c < NC; ++c) {
    double s = 0.0;
    for (int e = 0; e < NC; ++e) s += b.R[c][e] * ghat[e];
    fhat[c] = s;
  }
}

// All n+1 interface fluxes of one padded line (n + 2*ghost_width cells).
// Parallel across interfaces. Exceptions must not unwind through the OpenMP
// region, so a failed interface is recorded and rethrown after the loop
// (lowest index wins, keeping the diagnostic deterministic).
template <int NC>
inline void sweep_line(const double* padded, int n, const ReconKernel& kernel,
                       const double* alpha, double gamma, double* fhat) {
  int bad = n + 1;
#pragma omp parallel for schedule(static) reduction(min : bad)
  for (int k = 0; k <= n; ++k) {
    try {
      interface_flux<NC>(padded + k * NC, kernel, alpha, gamma, fhat + k * NC);
    } catch (const AdmissibilityError&) {
      bad = k < bad ? k : bad;
    }
  }
  if (bad <= n)
    throw AdmissibilityError("inadmissible interface average state", bad);
}

template <int NC>
inline void sweep_line_serial(const double* padded, int n,
                              const ReconKernel& kernel, const double* alpha,
                              double gamma, double* fhat) {
  for (int k = 0; k <= n; ++k) {
    try {
      interface_flux<NC>(padded + k * NC, kernel, alpha, gamma, fhat + k * NC);
    } catch (const AdmissibilityError&) {
      throw AdmissibilityError("inadmissible interface average state", k);
    }
  }
}

}  // namespace weno::detail
