#include "afdweno/time_integration.hpp"

#include <doctest.h>

#include <cmath>

using namespace afdweno;

namespace {

// Scalar state on a one-zone grid.
StateArray scalar(double v) {
  StateArray u(Grid(1, 0.0, 1.0, 1), 1);
  u.at(0)[0] = v;
  return u;
}

double integrate_decay(RkScheme s, double lambda, double t_end, int steps) {
  StateArray u = scalar(1.0);
  const double dt = t_end / steps;
  const RhsOperator rhs = [&](StateArray& v, double, StateArray& out) {
    out.at(0)[0] = lambda * v.at(0)[0];
  };
  for (int n = 0; n < steps; ++n) ssp_rk_step(s, rhs, u, n * dt, dt);
  return u.at(0)[0];
}

}  // namespace

TEST_CASE("scheme names and config validation") {
  CHECK(parse_rk_scheme("rk3") == RkScheme::ssp_rk3);
  CHECK(parse_rk_scheme("rk4") == RkScheme::ssp_rk4);
  CHECK_THROWS_AS(parse_rk_scheme("euler"), UsageError);
  TimeIntegratorConfig c;
  c.cfl = 1.2;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c.cfl = 0.0;
  CHECK_THROWS_AS(c.validate(), UsageError);
}

TEST_CASE("zero right-hand side leaves the state unchanged") {
  for (RkScheme s : {RkScheme::ssp_rk3, RkScheme::ssp_rk4}) {
    StateArray u = scalar(3.25);
    ssp_rk_step(s, [](StateArray&, double, StateArray& out) { out.fill(0.0); }, u, 0.0, 0.1);
    CHECK(u.at(0)[0] == doctest::Approx(3.25).epsilon(1e-15));
  }
}

TEST_CASE("RK3 amplification factor") {
  for (double z : {-0.3, -1.0, 0.5, -2.1}) {
    const double g = integrate_decay(RkScheme::ssp_rk3, z, 1.0, 1);
    CHECK(std::abs(g - (1 + z + z * z / 2 + z * z * z / 6)) < 1e-14);
    // RK4 agrees with the exponential through fourth order.
    const double g4 = integrate_decay(RkScheme::ssp_rk4, z, 1.0, 1);
    const double t4 = 1 + z + z * z / 2 + z * z * z / 6 + z * z * z * z / 24;
    CHECK(std::abs(g4 - t4) < 0.01 * std::pow(std::abs(z), 5) + 1e-14);
  }
}

TEST_CASE("Richardson order of the integrators") {
  auto order = [](RkScheme s) {
    const double exact = std::exp(-1.0);
    const double e1 = std::abs(integrate_decay(s, -1.0, 1.0, 20) - exact);
    const double e2 = std::abs(integrate_decay(s, -1.0, 1.0, 40) - exact);
    return std::log2(e1 / e2);
  };
  CHECK(std::abs(order(RkScheme::ssp_rk3) - 3.0) < 0.05);
  CHECK(std::abs(order(RkScheme::ssp_rk4) - 4.0) < 0.05);
}

TEST_CASE("stage hook is applied after every stage") {
  for (auto [s, stages] : {std::pair{RkScheme::ssp_rk3, 3}, std::pair{RkScheme::ssp_rk4, 5}}) {
    StateArray u = scalar(1.0);
    int calls = 0;
    ssp_rk_step(
        s, [](StateArray&, double, StateArray& out) { out.fill(1.0); }, u, 0.0, 0.1,
        [&](StateArray&) { ++calls; });
    CHECK(calls == stages);
  }
}

TEST_CASE("stage times") {
  // u' = t integrates exactly with every stage time correct.
  for (RkScheme s : {RkScheme::ssp_rk3, RkScheme::ssp_rk4}) {
    StateArray u = scalar(0.0);
    const RhsOperator rhs = [](StateArray&, double t, StateArray& out) { out.at(0)[0] = t * t; };
    ssp_rk_step(s, rhs, u, 1.0, 0.5);
    CHECK(u.at(0)[0] == doctest::Approx((1.5 * 1.5 * 1.5 - 1.0) / 3.0).epsilon(1e-14));
  }
}

TEST_CASE("TVD smoke test with first-order upwind advection") {
  const int n = 50;
  Grid g(n, 0.0, 1.0, 1);
  StateArray u(g, 1);
  for (int i = 0; i < n; ++i) u.at(i)[0] = (i > 10 && i < 25) ? 1.0 : (i % 7 == 0 ? 0.5 : 0.0);
  const double dx = g.dx();
  const RhsOperator rhs = [&](StateArray& v, double, StateArray& out) {
    v.at(-1)[0] = v.at(n - 1)[0];
    for (int i = 0; i < n; ++i) out.at(i)[0] = -(v.at(i)[0] - v.at(i - 1)[0]) / dx;
  };
  auto tv = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::abs(u.at(i)[0] - u.at((i + n - 1) % n)[0]);
    return s;
  };
  double prev = tv();
  for (int step = 0; step < 100; ++step) {
    ssp_rk_step(RkScheme::ssp_rk3, rhs, u, 0.0, 0.9 * dx);
    const double now = tv();
    CHECK(now <= prev + 1e-12);
    prev = now;
  }
}

TEST_CASE("compute_dt") {
  const SystemModel euler = SystemModel::euler(1.4);
  // rho = 1, p = 0: |lambda| = |v|. Use a cold flow with a tiny pressure.
  Grid g1(10, 0.0, 1.0, 2);
  StateArray u(g1, 4);
  StateVector w(4);
  w << 1.0, 2.0, 0.0, 1e-14;
  for (int i = 0; i < 10; ++i) u.set(i, 0, euler.prim_to_cons(w));
  CHECK(compute_dt(u, euler, 0.4) == doctest::Approx(0.02).epsilon(1e-6));

  // 2D, same speed in both directions, dx = dy: half of the 1D step.
  StateVector w0(4);
  w0 << 1.0, 0.0, 0.0, 1.0;
  StateArray a(g1, 4);
  for (int i = 0; i < 10; ++i) a.set(i, 0, euler.prim_to_cons(w0));
  Grid g2(10, 10, 0.0, 1.0, 0.0, 1.0, 2);
  StateArray b(g2, 4);
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i) b.set(i, j, euler.prim_to_cons(w0));
  CHECK(compute_dt(b, euler, 0.4) == doctest::Approx(0.5 * compute_dt(a, euler, 0.4)));
  const auto [sx, sy] = max_wave_speeds(b, euler);
  CHECK(sx == doctest::Approx(std::sqrt(1.4)));
  CHECK(sy == doctest::Approx(std::sqrt(1.4)));
}
