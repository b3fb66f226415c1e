#include "afdweno/weno_center.hpp"

#include "afdweno/types.hpp"
#include "ao_combine.hpp"

#include <cmath>
#include <string>

namespace afdweno {

using detail::ao_combine;
using detail::ao_weights;
using detail::convex_combine;

CenterVariant WenoConfig::center_variant() const {
  switch (order) {
    case 3: return CenterVariant::ao3;
    case 5: return CenterVariant::ao53;
    case 7: return order7_variant;
    case 9: return CenterVariant::ao93;
    default: throw UsageError("unsupported WENO order " + std::to_string(order));
  }
}

void WenoConfig::validate() const {
  if (order != 3 && order != 5 && order != 7 && order != 9)
    throw UsageError("unsupported WENO order " + std::to_string(order));
  if (order == 7 && order7_variant != CenterVariant::ao73 &&
      order7_variant != CenterVariant::ao753)
    throw UsageError("order 7 supports the ao73 and ao753 variants only");
  for (double g : {gamma_hi, gamma_avg, gamma_lo})
    if (!(g > 0.0 && g < 1.0)) throw UsageError("linear weights must lie in (0,1)");
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  if (tau_exponent < 0) throw UsageError("tau exponent must be non-negative");
}

int center_half_width(int order) {
  switch (order) {
    case 3:
    case 5: return 2;
    case 7: return 3;
    case 9: return 4;
    default: throw UsageError("unsupported WENO order " + std::to_string(order));
  }
}

void nonlinear_weights(std::span<const double> gamma, std::span<const double> beta, double eps,
                       int tau_exponent, std::span<double> out) {
  const std::size_t n = gamma.size();
  if (n < 2 || beta.size() != n || out.size() != n)
    throw UsageError("nonlinear_weights: mismatched or too short inputs");
  ao_weights(gamma.data(), beta.data(), int(n), eps, tau_exponent, out.data());
}

namespace {

// r3 fits ordered (centred, left, right) so the centred stencil is the tau
// reference of AO(3).
void fit_r3(const double* u0, ModalPolynomial* p, double* beta) {
  p[0] = fit_stencil(StencilId::center_c3, {u0 - 1, 3});
  p[1] = fit_stencil(StencilId::center_l3, {u0 - 2, 3});
  p[2] = fit_stencil(StencilId::center_r3, {u0, 3});
  for (int k = 0; k < 3; ++k) beta[k] = smoothness_indicator(p[k]);
}

}  // namespace

CenterInterpolation interp_center(const WenoConfig& config, std::span<const double> window) {
  const int hw = center_half_width(config.order);
  if (int(window.size()) != 2 * hw + 1)
    throw UsageError("interp_center: order " + std::to_string(config.order) + " expects " +
                     std::to_string(2 * hw + 1) + " values, got " +
                     std::to_string(window.size()));
  const double* u0 = window.data() + hw;
  const CenterVariant variant = config.center_variant();

  ModalPolynomial p[5];
  double beta[5], gamma[5], wbar[5];
  const double g_lo = config.gamma_lo, g_hi = config.gamma_hi;
  const double small_c = g_lo, small_side = 0.5 * (1.0 - g_lo);
  ModalPolynomial result;

  if (variant == CenterVariant::ao3) {
    fit_r3(u0, p, beta);
    gamma[0] = small_c;
    gamma[1] = gamma[2] = small_side;
    ao_weights(gamma, beta, 3, config.eps, config.tau_exponent ? config.tau_exponent : 2, wbar);
    result = convex_combine(p, wbar, 3);
  } else if (variant == CenterVariant::ao753) {
    p[0] = fit_stencil(StencilId::center_c7, {u0 - 3, 7});
    p[1] = fit_stencil(StencilId::center_c5, {u0 - 2, 5});
    beta[0] = smoothness_indicator(p[0]);
    beta[1] = smoothness_indicator(p[1]);
    fit_r3(u0, p + 2, beta + 2);
    const double rest = (1.0 - g_hi) * (1.0 - config.gamma_avg);
    gamma[0] = g_hi;
    gamma[1] = (1.0 - g_hi) * config.gamma_avg;
    gamma[2] = rest * small_c;
    gamma[3] = gamma[4] = rest * small_side;
    ao_weights(gamma, beta, 5, config.eps, config.tau_exponent ? config.tau_exponent : 3, wbar);
    result = ao_combine(p, gamma, wbar, 5);
  } else {
    const StencilId big = variant == CenterVariant::ao53   ? StencilId::center_c5
                          : variant == CenterVariant::ao73 ? StencilId::center_c7
                                                           : StencilId::center_c9;
    p[0] = fit_stencil(big, {u0 - hw, std::size_t(2 * hw + 1)});
    beta[0] = smoothness_indicator(p[0]);
    fit_r3(u0, p + 1, beta + 1);
    gamma[0] = g_hi;
    gamma[1] = (1.0 - g_hi) * small_c;
    gamma[2] = gamma[3] = (1.0 - g_hi) * small_side;
    ao_weights(gamma, beta, 4, config.eps, config.tau_exponent ? config.tau_exponent : 2, wbar);
    result = ao_combine(p, gamma, wbar, 4);
  }

  CenterInterpolation out;
  out.poly = result;
  out.u_left = eval_poly(result, 0, -0.5);
  out.u_right = eval_poly(result, 0, 0.5);
  out.du_center = eval_poly(result, 1, 0.0);
  return out;
}

}  // namespace afdweno
