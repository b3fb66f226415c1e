#include "system_impl.hpp"

#include <cmath>

namespace afdweno::detail::ten_moment {

namespace {

template <class T>
void cons_t(const T* w, T* u) {
  const T rho = w[0], vx = w[1], vy = w[2];
  u[0] = rho;
  u[1] = rho * vx;
  u[2] = rho * vy;
  u[3] = rho * vx * vx + w[3];
  u[4] = rho * vx * vy + w[4];
  u[5] = rho * vy * vy + w[5];
}

template <class T>
void flux_t(const T* w, T* f) {
  const T rho = w[0], vx = w[1], vy = w[2], pxx = w[3], pxy = w[4], pyy = w[5];
  f[0] = rho * vx;
  f[1] = rho * vx * vx + pxx;
  f[2] = rho * vx * vy + pxy;
  f[3] = rho * vx * vx * vx + T(3.0) * vx * pxx;
  f[4] = rho * vx * vx * vy + T(2.0) * vx * pxy + vy * pxx;
  f[5] = rho * vx * vy * vy + vx * pyy + T(2.0) * vy * pxy;
}

}  // namespace

StateVector prim_to_cons(const StateVector& w) {
  StateVector u(6);
  cons_t(w.data(), u.data());
  return u;
}

bool admissible(const StateVector& w) {
  return w.allFinite() && w[0] > 0.0 && w[3] > 0.0 && w[5] > 0.0 &&
         w[3] * w[5] - w[4] * w[4] > 0.0;
}

bool cons_to_prim(const StateVector& u, StateVector& w) {
  w.resize(6);
  const double rho = u[0];
  if (!(rho > 0.0)) return false;
  const double vx = u[1] / rho, vy = u[2] / rho;
  w << rho, vx, vy, u[3] - rho * vx * vx, u[4] - rho * vx * vy, u[5] - rho * vy * vy;
  return admissible(w);
}

StateVector flux_x(const StateVector& w, const StateVector&) {
  StateVector f(6);
  flux_t(w.data(), f.data());
  return f;
}

StateVector jacobian_vector_x(const StateVector& w, const StateVector& v) {
  return jacobian_vector_dual<6>(
      w, v, [](const Dual* a, Dual* b) { cons_t(a, b); },
      [](const Dual* a, Dual* b) { flux_t(a, b); });
}

double pressure_scalar(const StateVector& w) {
  return std::sqrt(w[3] * w[5] - w[4] * w[4]);
}

double sound_speed(const StateVector& w) { return std::sqrt(pressure_scalar(w) / w[0]); }

std::pair<double, double> eigen_range_x(const StateVector& w) {
  const double c = std::sqrt(3.0 * w[3] / w[0]);
  return {w[1] - c, w[1] + c};
}

Eigensystem eigensystem_x(const StateVector& w) {
  const double rho = w[0], vx = w[1], vy = w[2], pxx = w[3], pxy = w[4], pyy = w[5];
  const double c3 = std::sqrt(3.0 * pxx / rho);
  const double c1 = std::sqrt(pxx / rho);

  // Right eigenvectors of the primitive system, columns ordered by eigenvalue.
  Eigen::Matrix<double, 6, 6> rw = Eigen::Matrix<double, 6, 6>::Zero();
  auto fast = [&](int col, double s) {
    rw.col(col) << rho / s, 1.0, pxy / pxx, rho * s, rho * s * pxy / pxx,
        (pyy + 2.0 * pxy * pxy / pxx) / s;
  };
  auto slow = [&](int col, double s) {
    rw.col(col) << 0.0, 0.0, 1.0, 0.0, rho * s, 2.0 * pxy / s;
  };
  fast(0, -c3);
  slow(1, -c1);
  rw(0, 2) = 1.0;
  rw(5, 3) = 1.0;
  slow(4, c1);
  fast(5, c3);

  // dU/dW maps primitive eigenvectors to conserved ones.
  Eigen::Matrix<double, 6, 6> ju = Eigen::Matrix<double, 6, 6>::Identity();
  ju(1, 0) = vx;
  ju(1, 1) = rho;
  ju(2, 0) = vy;
  ju(2, 2) = rho;
  ju(3, 0) = vx * vx;
  ju(3, 1) = 2.0 * rho * vx;
  ju(4, 0) = vx * vy;
  ju(4, 1) = rho * vy;
  ju(4, 2) = rho * vx;
  ju(5, 0) = vy * vy;
  ju(5, 2) = 2.0 * rho * vy;

  Eigensystem es;
  es.lambda.resize(6);
  es.lambda << vx - c3, vx - c1, vx, vx, vx + c1, vx + c3;
  es.right = ju * rw;
  es.left.resize(6, 6);
  if (!invert_right<6>(es))
    throw DomainError("singular ten-moment eigenvector matrix at " + describe_state(w));
  return es;
}

}  // namespace afdweno::detail::ten_moment
