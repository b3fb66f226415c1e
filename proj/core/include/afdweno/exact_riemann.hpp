#pragma once

// Exact solution of the 1D Euler Riemann problem for an ideal gas.

namespace afdweno {

struct Primitive1D {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

class ExactEulerRiemann {
 public:
  /// Throws DomainError if the data generate vacuum.
  ExactEulerRiemann(const Primitive1D& left, const Primitive1D& right, double gamma);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  /// Residual of the pressure function at p_star.
  double residual() const { return residual_; }
  /// Similarity solution at xi = x / t.
  Primitive1D sample(double xi) const;

 private:
  double pressure_function(double p, const Primitive1D& s, double c, double& deriv) const;

  Primitive1D l_, r_;
  double g_, cl_, cr_;
  double p_star_ = 0.0, u_star_ = 0.0, residual_ = 0.0;
};

inline Primitive1D exact_euler_riemann(const Primitive1D& left, const Primitive1D& right,
                                       double gamma, double xi) {
  return ExactEulerRiemann(left, right, gamma).sample(xi);
}

}  // namespace afdweno
