#include "afdweno/correction.hpp"
#include "afdweno/scheme.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace afdweno;

namespace {

// Derivatives of a polynomial given by monomial coefficients.
double poly_derivative(const std::vector<double>& a, int n, double x) {
  double v = 0.0;
  for (std::size_t k = n; k < a.size(); ++k) {
    double f = a[k];
    for (int q = 0; q < n; ++q) f *= double(k) - q;
    v += f * std::pow(x, double(k) - n);
  }
  return v;
}

// Corrected flux of a scalar flux function at xi, built from its exact
// derivatives: w = F', so d_n = F^(n+1).
double corrected(const std::vector<double>& a, double xi, int order) {
  BoundaryDerivativeStack s;
  s.d1 = poly_derivative(a, 2, xi);
  s.d3 = poly_derivative(a, 4, xi);
  s.d5 = poly_derivative(a, 6, xi);
  s.d7 = poly_derivative(a, 8, xi);
  return numerical_flux(poly_derivative(a, 0, xi), s, order);
}

StateArray advection_state(const SystemModel& sys, int nx, double amp = 1.0) {
  Grid g(nx, 0.0, 1.0, required_ghost(9));
  StateArray u(g, sys.n_components());
  for (int i = 0; i < nx; ++i) {
    StateVector w(4);
    w << 2.0 + amp * std::sin(2.0 * std::numbers::pi * g.xc(i)), 1.0, 0.0, 1.0;
    u.set(i, 0, sys.prim_to_cons(w));
  }
  fill_ghosts(u, BoundaryConditions::all(BcKind::periodic), sys, 0.0);
  return u;
}

double advection_rhs_error(int order, int nx) {
  const SystemModel sys = SystemModel::euler(1.4);
  StateArray u = advection_state(sys, nx);
  SchemeConfig cfg;
  cfg.weno.order = order;
  StateArray out(u.grid(), 4);
  semidiscrete_rhs(u, sys, cfg, out);
  double err = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double exact = -2.0 * std::numbers::pi * std::cos(2.0 * std::numbers::pi * u.grid().xc(i));
    err += std::abs(out.get(i)[0] - exact);
  }
  return err / nx;
}

}  // namespace

TEST_CASE("exact coefficients") {
  const CorrectionCoefficients c = derive_correction_coefficients(9);
  CHECK(c.c[0] == ExactRational{-1, 24});
  CHECK(c.c[1] == ExactRational{7, 5760});
  CHECK(c.c[2] == ExactRational{-31, 967680});
  CHECK(c.c[3] == ExactRational{127, 154828800});
  CHECK(c.c[0].str() == "-1/24");
  for (int order : {3, 5, 7, 9}) {
    const CorrectionCoefficients d = derive_correction_coefficients(order);
    const CorrectionCoefficients t = correction_coefficients(order);
    CHECK(d.count() == (order - 1) / 2);
    for (int k = 0; k < 4; ++k) {
      CHECK(d.c[k] == t.c[k]);
      if (k >= d.count()) CHECK(d.c[k].num == 0);
    }
  }
  CHECK_THROWS_AS(derive_correction_coefficients(4), UsageError);
}

TEST_CASE("numerical flux examples") {
  CHECK(numerical_flux(3.0, BoundaryDerivativeStack{}, 9) == 3.0);
  BoundaryDerivativeStack s;
  s.d1 = 24.0;
  s.d3 = 1e9;  // ignored at order 3
  CHECK(numerical_flux(3.0, s, 3) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("Taylor identity for f = x + x^3") {
  const std::vector<double> f = {0, 1, 0, 1};
  const double plain = poly_derivative(f, 0, 0.5) - poly_derivative(f, 0, -0.5);
  CHECK(std::abs(plain - 1.0 - poly_derivative(f, 3, 0.0) / 24.0) < 1e-15);
  CHECK(corrected(f, 0.5, 3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(corrected(f, 0.5, 3) - corrected(f, -0.5, 3) - 1.0) < 1e-15);
}

TEST_CASE("corrected differences are exact through the design degree") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int order : {3, 5, 7, 9}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<double> a(order + 1);
      for (auto& x : a) x = d(rng);
      const double diff = corrected(a, 0.5, order) - corrected(a, -0.5, order);
      CHECK(std::abs(diff - poly_derivative(a, 1, 0.0)) < 1e-13);
    }
    // One degree higher is no longer exact.
    std::vector<double> hi(order + 3, 0.0);
    hi[order + 2] = 1.0;
    const double diff = corrected(hi, 0.5, order) - corrected(hi, -0.5, order);
    CHECK(std::abs(diff) > 1e-6);
  }
}

TEST_CASE("free-stream preservation") {
  std::mt19937 rng(42);
  for (const SystemModel& sys : oracle::all_systems()) {
    for (int order : {3, 5, 7, 9}) {
      for (bool two_d : {false, true}) {
        const Grid g = two_d ? Grid(12, 10, 0, 1, 0, 2, required_ghost(order))
                             : Grid(24, 0, 1, required_ghost(order));
        StateArray u(g, sys.n_components());
        const StateVector uc = sys.prim_to_cons(oracle::random_primitive(sys, rng));
        for (int j = 0; j < (two_d ? g.ny() : 1); ++j)
          for (int i = 0; i < g.nx(); ++i) u.set(i, j, uc);
        fill_ghosts(u, BoundaryConditions::all(BcKind::periodic), sys, 0.0);
        SchemeConfig cfg;
        cfg.weno.order = order;
        cfg.flattener = true;
        StateArray out(g, sys.n_components());
        semidiscrete_rhs(u, sys, cfg, out);
        double m = 0.0;
        for (int j = 0; j < (two_d ? g.ny() : 1); ++j)
          for (int i = 0; i < g.nx(); ++i) m = std::max(m, out.get(i, j).cwiseAbs().maxCoeff());
        CHECK(m <= 1e-13);
      }
    }
  }
}

TEST_CASE("periodic conservation") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> amp(0.0, 0.3);
  for (const SystemModel& sys : oracle::all_systems()) {
    for (int order : {3, 5, 7, 9}) {
      const Grid g(16, 14, 0, 1, 0, 1, required_ghost(order));
      StateArray u(g, sys.n_components());
      const StateVector base = oracle::random_primitive(sys, rng);
      double scale = 0.0;
      for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
          StateVector w = base;
          w[0] *= 1.0 + amp(rng);
          w[3] *= 1.0 + amp(rng);
          const StateVector uc = sys.prim_to_cons(w);
          u.set(i, j, uc);
          scale = std::max(scale, sys.flux(uc, Direction::x).cwiseAbs().maxCoeff());
          scale = std::max(scale, sys.flux(uc, Direction::y).cwiseAbs().maxCoeff());
        }
      fill_ghosts(u, BoundaryConditions::all(BcKind::periodic), sys, 0.0);
      SchemeConfig cfg;
      cfg.weno.order = order;
      StateArray out(g, sys.n_components());
      semidiscrete_rhs(u, sys, cfg, out);
      const StateVector total = out.interior_sum();
      // Sum of (F_{i+1/2} - F_{i-1/2})/dx over N zones telescopes to zero.
      CHECK(total.cwiseAbs().maxCoeff() <= 1e-13 * scale * g.nx() * g.ny() / g.dx());
    }
  }
}

TEST_CASE("advection RHS converges at the design order") {
  const double e0 = advection_rhs_error(5, 64), e1 = advection_rhs_error(5, 128);
  CHECK(std::log2(e0 / e1) >= 4.5);
}

TEST_CASE("characteristic boundary option is also consistent") {
  const SystemModel sys = SystemModel::euler(1.4);
  StateArray u = advection_state(sys, 64);
  SchemeConfig a, b;
  b.characteristic_boundary = true;
  StateArray oa(u.grid(), 4), ob(u.grid(), 4);
  semidiscrete_rhs(u, sys, a, oa);
  semidiscrete_rhs(u, sys, b, ob);
  double m = 0.0;
  for (int i = 0; i < 64; ++i) m = std::max(m, (oa.get(i) - ob.get(i)).cwiseAbs().maxCoeff());
  CHECK(m < 1e-4);
  CHECK(required_ghost(3) == 4);
  CHECK(required_ghost(7) == 6);
  CHECK(required_ghost(9) == 8);
}

TEST_CASE("inadmissible data names the zone") {
  const SystemModel sys = SystemModel::euler(1.4);
  StateArray u = advection_state(sys, 16);
  StateVector bad(4);
  bad << 1.0, 0.0, 0.0, -1.0;
  u.set(7, 0, bad);
  fill_ghosts(u, BoundaryConditions::all(BcKind::periodic), sys, 0.0);
  SchemeConfig cfg;
  StateArray out(u.grid(), 4);
  try {
    semidiscrete_rhs(u, sys, cfg, out);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find('7') != std::string::npos);
  }
}
