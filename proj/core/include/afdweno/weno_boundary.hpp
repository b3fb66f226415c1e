#pragma once

// Zone-boundary WENO-AO interpolation of the zone-centred w = A dU/dxi values,
// returning odd derivatives at the boundary.

#include "afdweno/legendre.hpp"
#include "afdweno/weno_center.hpp"

#include <span>

namespace afdweno {

/// Unit-coordinate odd derivatives at the boundary. Entries the order does
/// not need are zero.
struct BoundaryDerivativeStack {
  double d1 = 0.0;
  double d3 = 0.0;
  double d5 = 0.0;
  double d7 = 0.0;
};

/// First and last zone offsets of the boundary window, relative to the zone
/// left of the boundary: {-1,2}, {-1,2}, {-2,3}, {-3,4} for orders 3/5/7/9.
struct BoundaryWindow {
  int lo;
  int hi;
  int size() const { return hi - lo + 1; }
};
BoundaryWindow boundary_window(int order);

/// `window` holds f_{lo..hi}; the result is in boundary-centred coordinates.
ModalPolynomial interp_boundary(const WenoConfig& config, std::span<const double> window);

BoundaryDerivativeStack boundary_derivatives(const ModalPolynomial& p, int order);

}  // namespace afdweno
