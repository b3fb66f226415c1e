#include "system_impl.hpp"

#include <algorithm>
#include <cmath>

namespace afdweno::detail::rhd {

namespace {

template <class T>
void cons_t(const T* w, T* u, double g) {
  const T one(1.0);
  const T lorentz2 = one / (one - w[1] * w[1] - w[2] * w[2]);
  using std::sqrt;
  const T lorentz = sqrt(lorentz2);
  const T rho_h = w[0] + T(g / (g - 1.0)) * w[3];
  u[0] = w[0] * lorentz;
  u[1] = rho_h * lorentz2 * w[1];
  u[2] = rho_h * lorentz2 * w[2];
  u[3] = rho_h * lorentz2 - w[3];
}

template <class T>
void flux_t(const T* w, T* f, double g) {
  T u[4];
  cons_t(w, u, g);
  f[0] = u[0] * w[1];
  f[1] = u[1] * w[1] + w[3];
  f[2] = u[2] * w[1];
  f[3] = u[1];
}

}  // namespace

StateVector prim_to_cons(const StateVector& w, double g) {
  StateVector u(4);
  cons_t(w.data(), u.data(), g);
  return u;
}

bool admissible(const StateVector& w) {
  return w.allFinite() && w[0] > 0.0 && w[3] > 0.0 && w[1] * w[1] + w[2] * w[2] < 1.0;
}

// Pressure recovery: root of f(p) = (rho h - rho)/g - p, where for a trial p
// the velocity is |M|/(E+p), rho h = (E+p)(1 - v^2) and rho = D sqrt(1 - v^2).
// Newton steps safeguarded by bisection on a bracket [lo, hi].
bool cons_to_prim(const StateVector& u, double g, StateVector& w, double p_guess) {
  w.resize(4);
  const double d = u[0], mx = u[1], my = u[2], e = u[3];
  const double m2 = mx * mx + my * my;
  if (!(d > 0.0) || !(e * e > m2 + d * d) || !std::isfinite(m2)) return false;
  const double gg = g / (g - 1.0);

  auto residual = [&](double p, double& deriv) {
    const double ep = e + p;
    const double v2 = m2 / (ep * ep);
    const double sq = std::sqrt(1.0 - v2);
    const double rho_h = ep * (1.0 - v2);
    const double rho = d * sq;
    deriv = (1.0 + v2 - d * v2 / (sq * ep)) / gg - 1.0;
    return (rho_h - rho) / gg - p;
  };

  double lo = 0.0, hi = (g - 1.0) * e;
  double deriv = 0.0;
  for (int k = 0; k < 60 && residual(hi, deriv) > 0.0; ++k) hi *= 2.0;
  double p = (p_guess > lo && p_guess < hi) ? p_guess : 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    const double f = residual(p, deriv);
    if (f > 0.0) lo = p;
    else hi = p;
    double next = p - f / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - p);
    p = next;
    if (step <= 1e-14 * p || hi - lo <= 1e-15 * hi) {
      converged = true;
      break;
    }
  }
  if (!converged || !(p > 0.0)) return false;
  const double ep = e + p;
  w << d * std::sqrt(1.0 - m2 / (ep * ep)), mx / ep, my / ep, p;
  return admissible(w);
}

StateVector flux_x(const StateVector& w, const StateVector& u) {
  StateVector f(4);
  f << u[0] * w[1], u[1] * w[1] + w[3], u[2] * w[1], u[1];
  return f;
}

StateVector jacobian_vector_x(const StateVector& w, const StateVector& v, double g) {
  return jacobian_vector_dual<4>(
      w, v, [g](const Dual* a, Dual* b) { cons_t(a, b, g); },
      [g](const Dual* a, Dual* b) { flux_t(a, b, g); });
}

double sound_speed(const StateVector& w, double g) {
  const double rho_h = w[0] + g / (g - 1.0) * w[3];
  return std::sqrt(g * w[3] / rho_h);
}

namespace {

void acoustic_speeds(const StateVector& w, double g, double& lm, double& lp) {
  const double vx = w[1], vy = w[2];
  const double v2 = vx * vx + vy * vy;
  const double cs = sound_speed(w, g);
  const double c2 = cs * cs;
  const double root = cs * std::sqrt((1.0 - v2) * (1.0 - vx * vx - vy * vy * c2));
  const double den = 1.0 - v2 * c2;
  lm = (vx * (1.0 - c2) - root) / den;
  lp = (vx * (1.0 - c2) + root) / den;
}

}  // namespace

std::pair<double, double> eigen_range_x(const StateVector& w, double g) {
  double lm, lp;
  acoustic_speeds(w, g, lm, lp);
  return {lm, lp};
}

Eigensystem eigensystem_x(const StateVector& w, double g) {
  const double rho = w[0], vx = w[1], vy = w[2], p = w[3];
  const double h = 1.0 + g / (g - 1.0) * p / rho;
  const double lorentz = 1.0 / std::sqrt(1.0 - vx * vx - vy * vy);
  const double cs = sound_speed(w, g);
  const double kappa = (g - 1.0) / (g - 1.0 - cs * cs);
  double lm, lp;
  acoustic_speeds(w, g, lm, lp);
  const double am = (1.0 - vx * vx) / (1.0 - vx * lm);
  const double ap = (1.0 - vx * vx) / (1.0 - vx * lp);
  const double hl = h * lorentz;
  const double hl2 = hl * lorentz;

  Eigensystem es;
  es.lambda.resize(4);
  es.lambda << lm, vx, vx, lp;
  es.right.resize(4, 4);
  es.right << 1.0, kappa / hl, lorentz * vy, 1.0,
              hl * am * lm, vx, 2.0 * hl2 * vx * vy, hl * ap * lp,
              hl * vy, vy, h * (1.0 + 2.0 * lorentz * lorentz * vy * vy), hl * vy,
              hl * am, 1.0, 2.0 * hl2 * vy, hl * ap;
  es.left.resize(4, 4);
  if (!invert_right<4>(es)) throw DomainError("singular RHD eigenvector matrix at " +
                                              describe_state(w));
  return es;
}

}  // namespace afdweno::detail::rhd
