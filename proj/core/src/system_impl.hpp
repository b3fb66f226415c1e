#pragma once

// x-direction kernels of each system. The y direction is obtained by the
// component permutation in SystemModel.

#include "afdweno/systems.hpp"
#include "dual.hpp"

#include <Eigen/LU>

namespace afdweno::detail {

namespace euler {
StateVector prim_to_cons(const StateVector& w, double g);
bool cons_to_prim(const StateVector& u, double g, StateVector& w);
bool admissible(const StateVector& w);
StateVector flux_x(const StateVector& w, const StateVector& u);
StateVector jacobian_vector_x(const StateVector& w, const StateVector& v, double g);
Eigensystem eigensystem_x(const StateVector& w, double g);
std::pair<double, double> eigen_range_x(const StateVector& w, double g);
double sound_speed(const StateVector& w, double g);
}  // namespace euler

namespace rhd {
StateVector prim_to_cons(const StateVector& w, double g);
bool cons_to_prim(const StateVector& u, double g, StateVector& w, double p_guess);
bool admissible(const StateVector& w);
StateVector flux_x(const StateVector& w, const StateVector& u);
StateVector jacobian_vector_x(const StateVector& w, const StateVector& v, double g);
Eigensystem eigensystem_x(const StateVector& w, double g);
std::pair<double, double> eigen_range_x(const StateVector& w, double g);
double sound_speed(const StateVector& w, double g);
}  // namespace rhd

namespace ten_moment {
StateVector prim_to_cons(const StateVector& w);
bool cons_to_prim(const StateVector& u, StateVector& w);
bool admissible(const StateVector& w);
StateVector flux_x(const StateVector& w, const StateVector& u);
StateVector jacobian_vector_x(const StateVector& w, const StateVector& v);
Eigensystem eigensystem_x(const StateVector& w);
std::pair<double, double> eigen_range_x(const StateVector& w);
double sound_speed(const StateVector& w);
double pressure_scalar(const StateVector& w);
}  // namespace ten_moment

// A v = J_F (J_U^{-1} v), with J_U = dU/dW and J_F = dF/dW obtained by
// forward-mode differentiation of templated maps W -> U and W -> F.
template <int N, class ConsFn, class FluxFn>
StateVector jacobian_vector_dual(const StateVector& w, const StateVector& v, ConsFn cons,
                                 FluxFn flux) {
  Eigen::Matrix<double, N, N> ju;
  Dual wd[N], out[N];
  for (int col = 0; col < N; ++col) {
    for (int k = 0; k < N; ++k) wd[k] = Dual(w[k], k == col ? 1.0 : 0.0);
    cons(wd, out);
    for (int k = 0; k < N; ++k) ju(k, col) = out[k].d;
  }
  Eigen::Matrix<double, N, 1> rhs;
  for (int k = 0; k < N; ++k) rhs[k] = v[k];
  const Eigen::Matrix<double, N, 1> dw = ju.partialPivLu().solve(rhs);
  for (int k = 0; k < N; ++k) wd[k] = Dual(w[k], dw[k]);
  flux(wd, out);
  StateVector r(N);
  for (int k = 0; k < N; ++k) r[k] = out[k].d;
  return r;
}

// Left eigenvectors by inverting the right-eigenvector matrix. Returns false
// when R is numerically singular.
template <int N>
bool invert_right(Eigensystem& es) {
  const Eigen::Matrix<double, N, N> r = es.right;
  Eigen::Matrix<double, N, N> l;
  bool ok = true;
  if constexpr (N == 4) {
    double det = 0.0;
    r.computeInverseAndDetWithCheck(l, det, ok, 0.0);
    const double scale = r.cwiseAbs().rowwise().sum().prod();
    ok = ok && std::isfinite(det) && std::abs(det) > 1e-14 * scale;
  } else {
    Eigen::PartialPivLU<Eigen::Matrix<double, N, N>> lu(r);
    l = lu.inverse();
    const double det = lu.determinant();
    const double scale = r.cwiseAbs().rowwise().sum().prod();
    ok = std::isfinite(det) && std::abs(det) > 1e-14 * scale;
  }
  es.left = l;
  return ok && l.allFinite();
}

}  // namespace afdweno::detail
