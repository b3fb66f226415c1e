#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls into the library's numerical kernels.

#include "afdweno/systems.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

// Monomial coefficients of L_0..L_8 on [-1/2, 1/2], index = power.
inline const std::array<std::array<double, 9>, 9>& legendre_monomials() {
  static const std::array<std::array<double, 9>, 9> m = {{
      {1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 0, 0},
      {-1.0 / 12, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, -3.0 / 20, 0, 1, 0, 0, 0, 0, 0},
      {3.0 / 560, 0, -3.0 / 14, 0, 1, 0, 0, 0, 0},
      {0, 5.0 / 336, 0, -5.0 / 18, 0, 1, 0, 0, 0},
      {-5.0 / 14784, 0, 5.0 / 176, 0, -15.0 / 44, 0, 1, 0, 0},
      {0, -35.0 / 27456, 0, 105.0 / 2288, 0, -21.0 / 52, 0, 1, 0},
      {7.0 / 329472, 0, -7.0 / 2288, 0, 7.0 / 104, 0, -7.0 / 15, 0, 1},
  }};
  return m;
}

// n-th derivative of sum_k c_k L_k at x.
inline double modal_value(const std::vector<double>& c, int n, double x) {
  const auto& m = legendre_monomials();
  double v = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (int a = n; a <= int(k); ++a) {
      double f = m[k][a];
      for (int q = 0; q < n; ++q) f *= a - q;
      v += c[k] * f * std::pow(x, a - n);
    }
  }
  return v;
}

// Legendre-mode coefficients of the interpolant through (nodes, values),
// obtained from a dense Vandermonde solve.
inline std::vector<double> vandermonde_fit(const std::vector<double>& nodes,
                                           const std::vector<double>& values) {
  const int n = int(nodes.size());
  Eigen::MatrixXd v(n, n);
  Eigen::VectorXd b(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      std::vector<double> e(n, 0.0);
      e[k] = 1.0;
      v(j, k) = modal_value(e, 0, nodes[j]);
    }
    b[j] = values[j];
  }
  const Eigen::VectorXd c = v.fullPivLu().solve(b);
  return {c.data(), c.data() + n};
}

// sum_{m>=1} integral_{-1/2}^{1/2} (d^m p)^2 by 12-point Gauss-Legendre.
inline double beta_quadrature(const std::vector<double>& c) {
  static const double xg[6] = {0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
                               0.7699026741943047, 0.9041172563704749, 0.9815606342467192};
  static const double wg[6] = {0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
                               0.1600783285433462, 0.1069393259953184, 0.0471753363865118};
  const int d = int(c.size()) - 1;
  double beta = 0.0;
  for (int m = 1; m <= d; ++m) {
    for (int q = 0; q < 6; ++q) {
      for (double s : {-1.0, 1.0}) {
        const double v = modal_value(c, m, 0.5 * s * xg[q]);
        beta += 0.5 * wg[q] * v * v;
      }
    }
  }
  return beta;
}

// Central-difference Jacobian of the conserved flux, column by column.
inline afdweno::StateMatrix fd_jacobian(const afdweno::SystemModel& sys,
                                        const afdweno::StateVector& u, afdweno::Direction d) {
  const int n = sys.n_components();
  afdweno::StateMatrix j(n, n);
  for (int k = 0; k < n; ++k) {
    const double h = 1e-6 * std::max(1.0, std::abs(u[k]));
    afdweno::StateVector up = u, um = u;
    up[k] += h;
    um[k] -= h;
    j.col(k) = (sys.flux(up, d) - sys.flux(um, d)) / (2.0 * h);
  }
  return j;
}

// Random admissible primitive state for the given system.
inline afdweno::StateVector random_primitive(const afdweno::SystemModel& sys, std::mt19937& rng) {
  std::uniform_real_distribution<double> pos(0.2, 5.0), vel(-2.0, 2.0), unit(-1.0, 1.0);
  switch (sys.kind()) {
    case afdweno::SystemKind::euler: {
      afdweno::StateVector w(4);
      w << pos(rng), vel(rng), vel(rng), pos(rng);
      return w;
    }
    case afdweno::SystemKind::rhd: {
      afdweno::StateVector w(4);
      // |v| up to 0.95, any direction.
      const double speed = 0.95 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double ang = 3.14159265358979 * unit(rng);
      w << pos(rng), speed * std::cos(ang), speed * std::sin(ang), pos(rng);
      return w;
    }
    case afdweno::SystemKind::ten_moment: {
      afdweno::StateVector w(6);
      const double pxx = pos(rng), pyy = pos(rng);
      const double pxy = 0.9 * unit(rng) * std::sqrt(pxx * pyy);
      w << pos(rng), vel(rng), vel(rng), pxx, pxy, pyy;
      return w;
    }
  }
  return {};
}

inline std::vector<afdweno::SystemModel> all_systems() {
  return {afdweno::SystemModel::euler(1.4), afdweno::SystemModel::rhd(5.0 / 3.0),
          afdweno::SystemModel::rhd(4.0 / 3.0), afdweno::SystemModel::ten_moment()};
}

}  // namespace oracle
