#include "afdweno/exact_riemann.hpp"

#include "afdweno/types.hpp"

#include <algorithm>
#include <cmath>

namespace afdweno {

ExactEulerRiemann::ExactEulerRiemann(const Primitive1D& left, const Primitive1D& right,
                                     double gamma)
    : l_(left), r_(right), g_(gamma) {
  if (!(left.rho > 0 && left.p > 0 && right.rho > 0 && right.p > 0 && gamma > 1))
    throw DomainError("exact Riemann solver needs positive densities and pressures");
  cl_ = std::sqrt(g_ * l_.p / l_.rho);
  cr_ = std::sqrt(g_ * r_.p / r_.rho);
  const double du = r_.u - l_.u;
  if (2.0 * (cl_ + cr_) / (g_ - 1.0) <= du) throw DomainError("Riemann data generate vacuum");

  // Two-rarefaction initial guess, then Newton on f_L(p) + f_R(p) + du = 0.
  const double z = (g_ - 1.0) / (2.0 * g_);
  double p = std::pow((cl_ + cr_ - 0.5 * (g_ - 1.0) * du) /
                          (cl_ / std::pow(l_.p, z) + cr_ / std::pow(r_.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-14);
  for (int it = 0; it < 200; ++it) {
    double dl, dr;
    const double f = pressure_function(p, l_, cl_, dl) + pressure_function(p, r_, cr_, dr) + du;
    double next = p - f / (dl + dr);
    if (next <= 0.0) next = 0.5 * p;
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < 1e-15) break;
  }
  double dl, dr;
  const double fl = pressure_function(p, l_, cl_, dl), fr = pressure_function(p, r_, cr_, dr);
  p_star_ = p;
  u_star_ = 0.5 * (l_.u + r_.u) + 0.5 * (fr - fl);
  residual_ = fl + fr + du;
}

double ExactEulerRiemann::pressure_function(double p, const Primitive1D& s, double c,
                                            double& deriv) const {
  if (p > s.p) {
    const double a = 2.0 / ((g_ + 1.0) * s.rho);
    const double b = (g_ - 1.0) / (g_ + 1.0) * s.p;
    const double q = std::sqrt(a / (p + b));
    deriv = q * (1.0 - 0.5 * (p - s.p) / (b + p));
    return (p - s.p) * q;
  }
  const double pr = p / s.p;
  deriv = std::pow(pr, -(g_ + 1.0) / (2.0 * g_)) / (s.rho * c);
  return 2.0 * c / (g_ - 1.0) * (std::pow(pr, (g_ - 1.0) / (2.0 * g_)) - 1.0);
}

Primitive1D ExactEulerRiemann::sample(double xi) const {
  const double g = g_;
  const double gm = (g - 1.0) / (g + 1.0);
  if (xi <= u_star_) {
    const Primitive1D& s = l_;
    const double c = cl_;
    if (p_star_ > s.p) {
      const double pr = p_star_ / s.p;
      const double shock = s.u - c * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
      if (xi <= shock) return s;
      return {s.rho * (pr + gm) / (pr * gm + 1.0), u_star_, p_star_};
    }
    const double head = s.u - c;
    const double c_star = c * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
    const double tail = u_star_ - c_star;
    if (xi <= head) return s;
    if (xi >= tail) return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), u_star_, p_star_};
    const double f = 2.0 / (g + 1.0) + gm / c * (s.u - xi);
    return {s.rho * std::pow(f, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * s.u + xi),
            s.p * std::pow(f, 2.0 * g / (g - 1.0))};
  }
  const Primitive1D& s = r_;
  const double c = cr_;
  if (p_star_ > s.p) {
    const double pr = p_star_ / s.p;
    const double shock = s.u + c * std::sqrt((g + 1.0) / (2.0 * g) * pr + (g - 1.0) / (2.0 * g));
    if (xi >= shock) return s;
    return {s.rho * (pr + gm) / (pr * gm + 1.0), u_star_, p_star_};
  }
  const double head = s.u + c;
  const double c_star = c * std::pow(p_star_ / s.p, (g - 1.0) / (2.0 * g));
  const double tail = u_star_ + c_star;
  if (xi >= head) return s;
  if (xi <= tail) return {s.rho * std::pow(p_star_ / s.p, 1.0 / g), u_star_, p_star_};
  const double f = 2.0 / (g + 1.0) - gm / c * (s.u - xi);
  return {s.rho * std::pow(f, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * s.u + xi),
          s.p * std::pow(f, 2.0 * g / (g - 1.0))};
}

}  // namespace afdweno
