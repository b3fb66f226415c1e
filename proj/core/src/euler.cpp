#include "system_impl.hpp"

#include <cmath>

namespace afdweno::detail::euler {

StateVector prim_to_cons(const StateVector& w, double g) {
  const double rho = w[0], u = w[1], v = w[2], p = w[3];
  StateVector c(4);
  c << rho, rho * u, rho * v, p / (g - 1.0) + 0.5 * rho * (u * u + v * v);
  return c;
}

bool admissible(const StateVector& w) {
  return w.allFinite() && w[0] > 0.0 && w[3] > 0.0;
}

bool cons_to_prim(const StateVector& u, double g, StateVector& w) {
  const double rho = u[0];
  w.resize(4);
  if (!(rho > 0.0)) return false;
  const double vx = u[1] / rho, vy = u[2] / rho;
  w << rho, vx, vy, (g - 1.0) * (u[3] - 0.5 * rho * (vx * vx + vy * vy));
  return admissible(w);
}

StateVector flux_x(const StateVector& w, const StateVector& u) {
  const double vx = w[1], p = w[3];
  StateVector f(4);
  f << u[1], u[1] * vx + p, u[2] * vx, vx * (u[3] + p);
  return f;
}

StateVector jacobian_vector_x(const StateVector& w, const StateVector& dv, double g) {
  const double u = w[1], v = w[2];
  const double q2 = u * u + v * v;
  const double e = w[3] / (g - 1.0) + 0.5 * w[0] * q2;
  const double h = (e + w[3]) / w[0];
  const double gm = g - 1.0;
  StateVector r(4);
  r[0] = dv[1];
  r[1] = (0.5 * gm * q2 - u * u) * dv[0] + (3.0 - g) * u * dv[1] - gm * v * dv[2] + gm * dv[3];
  r[2] = -u * v * dv[0] + v * dv[1] + u * dv[2];
  r[3] = u * (0.5 * gm * q2 - h) * dv[0] + (h - gm * u * u) * dv[1] - gm * u * v * dv[2] +
         g * u * dv[3];
  return r;
}

double sound_speed(const StateVector& w, double g) { return std::sqrt(g * w[3] / w[0]); }

std::pair<double, double> eigen_range_x(const StateVector& w, double g) {
  const double c = sound_speed(w, g);
  return {w[1] - c, w[1] + c};
}

Eigensystem eigensystem_x(const StateVector& w, double g) {
  const double u = w[1], v = w[2];
  const double c = sound_speed(w, g);
  const double q2 = u * u + v * v;
  const double h = c * c / (g - 1.0) + 0.5 * q2;
  const double b1 = (g - 1.0) / (c * c);
  const double b2 = 0.5 * q2 * b1;

  Eigensystem es;
  es.lambda.resize(4);
  es.lambda << u - c, u, u, u + c;
  es.right.resize(4, 4);
  es.right << 1.0, 1.0, 0.0, 1.0,
              u - c, u, 0.0, u + c,
              v, v, 1.0, v,
              h - u * c, 0.5 * q2, v, h + u * c;
  es.left.resize(4, 4);
  es.left << 0.5 * (b2 + u / c), 0.5 * (-b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1,
             1.0 - b2, b1 * u, b1 * v, -b1,
             -v, 0.0, 1.0, 0.0,
             0.5 * (b2 - u / c), 0.5 * (-b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1;
  return es;
}

}  // namespace afdweno::detail::euler
