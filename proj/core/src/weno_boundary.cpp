#include "afdweno/weno_boundary.hpp"

#include "afdweno/types.hpp"
#include "ao_combine.hpp"

#include <string>

namespace afdweno {

using detail::ao_combine;
using detail::ao_weights;
using detail::convex_combine;

BoundaryWindow boundary_window(int order) {
  switch (order) {
    case 3:
    case 5: return {-1, 2};
    case 7: return {-2, 3};
    case 9: return {-3, 4};
    default: throw UsageError("unsupported WENO order " + std::to_string(order));
  }
}

ModalPolynomial interp_boundary(const WenoConfig& config, std::span<const double> window) {
  const BoundaryWindow bw = boundary_window(config.order);
  if (int(window.size()) != bw.size())
    throw UsageError("interp_boundary: order " + std::to_string(config.order) + " expects " +
                     std::to_string(bw.size()) + " values, got " + std::to_string(window.size()));
  // f0 is the zone left of the boundary.
  const double* f0 = window.data() - bw.lo;

  ModalPolynomial p[4];
  double beta[4], gamma[4], wbar[4];
  const double g_hi = config.gamma_hi;
  const auto tau_exp = [&](int fallback) {
    return config.tau_exponent ? config.tau_exponent : fallback;
  };

  int n = 0;
  if (config.order == 9) {
    p[0] = fit_stencil(StencilId::zb_c8, {f0 - 3, 8});
    p[1] = fit_stencil(StencilId::zb_c6, {f0 - 2, 6});
    gamma[0] = g_hi;
    gamma[1] = (1.0 - g_hi) * config.gamma_avg;
    gamma[2] = gamma[3] = 0.5 * (1.0 - g_hi) * (1.0 - config.gamma_avg);
    n = 2;
  } else if (config.order == 7) {
    p[0] = fit_stencil(StencilId::zb_c6, {f0 - 2, 6});
    n = 1;
  } else if (config.order == 5) {
    p[0] = fit_stencil(StencilId::zb_c4, {f0 - 1, 4});
    n = 1;
  }
  if (n == 1) {
    gamma[0] = g_hi;
    gamma[1] = gamma[2] = 0.5 * (1.0 - g_hi);
  }
  p[n] = fit_stencil(StencilId::zb_l3, {f0 - 1, 3});
  p[n + 1] = fit_stencil(StencilId::zb_r3, {f0, 3});
  for (int k = 0; k < n + 2; ++k) beta[k] = smoothness_indicator(p[k]);

  if (config.order == 3) {
    gamma[0] = gamma[1] = 0.5;
    ao_weights(gamma, beta, 2, config.eps, tau_exp(2), wbar);
    return convex_combine(p, wbar, 2);
  }
  ao_weights(gamma, beta, n + 2, config.eps, tau_exp(config.order == 9 ? 4 : 2), wbar);
  return ao_combine(p, gamma, wbar, n + 2);
}

BoundaryDerivativeStack boundary_derivatives(const ModalPolynomial& p, int order) {
  BoundaryDerivativeStack s;
  if (order != 3 && order != 5 && order != 7 && order != 9)
    throw UsageError("unsupported WENO order " + std::to_string(order));
  s.d1 = eval_poly(p, 1, 0.0);
  if (order >= 5) s.d3 = eval_poly(p, 3, 0.0);
  if (order >= 7) s.d5 = eval_poly(p, 5, 0.0);
  if (order >= 9) s.d7 = eval_poly(p, 7, 0.0);
  return s;
}

}  // namespace afdweno
