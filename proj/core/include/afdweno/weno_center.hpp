#pragma once

// Zone-centred WENO-AO interpolation of point values.

#include "afdweno/legendre.hpp"

#include <span>

namespace afdweno {

enum class CenterVariant { ao3, ao53, ao73, ao753, ao93 };

struct WenoConfig {
  int order = 5;  // 3, 5, 7 or 9
  double gamma_hi = 0.85;
  double gamma_avg = 0.85;
  double gamma_lo = 0.85;
  double eps = 1e-12;
  // 0 selects the exponent that belongs to the variant.
  int tau_exponent = 0;
  // Only consulted for order 7, where ao73 and ao753 are both available.
  CenterVariant order7_variant = CenterVariant::ao73;

  CenterVariant center_variant() const;
  /// Throws UsageError on an unsupported order or out-of-range parameter.
  void validate() const;
};

/// Half-width of the centred window: 2, 2, 3, 4 for orders 3, 5, 7, 9.
int center_half_width(int order);

struct CenterInterpolation {
  ModalPolynomial poly;
  double u_left = 0.0;     // P(-1/2)
  double u_right = 0.0;    // P(+1/2)
  double du_center = 0.0;  // P'(0)
};

/// Normalized weights w_k = gamma_k (1 + tau^p / (beta_k + eps)^2), with
/// tau the mean |beta_0 - beta_k| over k >= 1. Writes into `out`.
void nonlinear_weights(std::span<const double> gamma, std::span<const double> beta, double eps,
                       int tau_exponent, std::span<double> out);

/// `window` holds u_{-hw..+hw} for the configured order.
CenterInterpolation interp_center(const WenoConfig& config, std::span<const double> window);

}  // namespace afdweno
