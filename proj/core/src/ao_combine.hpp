#pragma once

#include "afdweno/legendre.hpp"

#include <cmath>

namespace afdweno::detail {

inline double int_pow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Normalized WENO-AO weights; index 0 is the reference stencil for tau.
inline void ao_weights(const double* gamma, const double* beta, int n, double eps, int p,
                       double* out) {
  double tau = 0.0;
  for (int k = 1; k < n; ++k) tau += std::abs(beta[0] - beta[k]);
  tau /= (n - 1);
  const double tp = int_pow(tau, p);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double b = beta[k] + eps;
    out[k] = gamma[k] * (1.0 + tp / (b * b));
    sum += out[k];
  }
  for (int k = 0; k < n; ++k) out[k] /= sum;
}

// (wbar_0/gamma_0)(P_0 - sum_k gamma_k P_k) + sum_k wbar_k P_k, k >= 1.
inline ModalPolynomial ao_combine(const ModalPolynomial* polys, const double* gamma,
                                  const double* wbar, int n) {
  ModalPolynomial big = polys[0];
  for (int k = 1; k < n; ++k) big.add_scaled(polys[k], -gamma[k]);
  big *= wbar[0] / gamma[0];
  for (int k = 1; k < n; ++k) big.add_scaled(polys[k], wbar[k]);
  return big;
}

// Plain convex combination sum_k wbar_k P_k.
inline ModalPolynomial convex_combine(const ModalPolynomial* polys, const double* wbar, int n) {
  ModalPolynomial out(polys[0].degree());
  for (int k = 0; k < n; ++k) out.add_scaled(polys[k], wbar[k]);
  return out;
}

}  // namespace afdweno::detail
