#pragma once

// High-order flux corrections: F_num = F* + c2 d1 + c4 d3 + c6 d5 + c8 d7,
// with d_n the unit-coordinate odd derivatives of w = A dU/dxi at the boundary.

#include "afdweno/types.hpp"
#include "afdweno/weno_boundary.hpp"

#include <array>
#include <string>

namespace afdweno {

struct ExactRational {
  long long num = 0;
  long long den = 1;
  double value() const { return double(num) / double(den); }
  std::string str() const;
  bool operator==(const ExactRational&) const = default;
};

struct CorrectionCoefficients {
  int order = 0;
  /// c2, c4, c6, c8; entries beyond the order are 0.
  std::array<ExactRational, 4> c{};
  int count() const { return (order - 1) / 2; }
};

/// Solves the Taylor-cancellation system in exact rational arithmetic.
CorrectionCoefficients derive_correction_coefficients(int order);

/// Tabulated values, truncated to `order`.
CorrectionCoefficients correction_coefficients(int order);

/// Scalar corrected flux.
double numerical_flux(double f_star, const BoundaryDerivativeStack& stack, int order);

}  // namespace afdweno
