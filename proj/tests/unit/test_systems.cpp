#include "afdweno/systems.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace afdweno;

namespace {

StateVector vec(std::initializer_list<double> v) {
  StateVector s(int(v.size()));
  int k = 0;
  for (double x : v) s[k++] = x;
  return s;
}

double max_abs(const StateVector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("conversion examples") {
  const SystemModel rhd = SystemModel::rhd(5.0 / 3.0);
  const StateVector u = rhd.prim_to_cons(vec({1, 0, 0, 1}));
  CHECK(max_abs(u - vec({1, 0, 0, 2.5})) < 1e-14);

  const SystemModel euler = SystemModel::euler(1.4);
  const StateVector ue = euler.prim_to_cons(vec({1, 0, 0, 1}));
  CHECK(max_abs(ue - vec({1, 0, 0, 2.5})) < 1e-14);
  CHECK(max_abs(euler.flux(ue, Direction::x) - vec({0, 1, 0, 0})) < 1e-14);
  CHECK(max_abs(euler.flux(ue, Direction::y) - vec({0, 0, 1, 0})) < 1e-14);

  const SystemModel tm = SystemModel::ten_moment();
  const StateVector w = vec({1, 0, 0, 2, 0.3, 0.7});
  const StateVector ut = tm.prim_to_cons(w);
  CHECK(max_abs(tm.flux(ut, Direction::x) - vec({0, 2, 0.3, 0, 0, 0})) < 1e-14);
}

TEST_CASE("round trip on random states") {
  std::mt19937 rng(21);
  for (const SystemModel& sys : oracle::all_systems()) {
    for (int t = 0; t < 1000; ++t) {
      const StateVector w = oracle::random_primitive(sys, rng);
      const StateVector back = sys.cons_to_prim(sys.prim_to_cons(w));
      CHECK(max_abs(back - w) <= 1e-12 * std::max(1.0, max_abs(w)));
    }
  }
}

TEST_CASE("inadmissible states raise domain errors") {
  const SystemModel euler = SystemModel::euler();
  CHECK_THROWS_AS(euler.cons_to_prim(vec({-1, 0, 0, 1})), DomainError);
  CHECK_THROWS_AS(euler.cons_to_prim(vec({1, 2, 0, 1})), DomainError);
  StateVector w;
  CHECK_FALSE(euler.try_cons_to_prim(vec({1, 2, 0, 1}), w));

  const SystemModel rhd = SystemModel::rhd();
  CHECK_FALSE(rhd.admissible_prim(vec({1, 0.8, 0.8, 1})));
  CHECK_THROWS_AS(rhd.cons_to_prim(vec({1, 5, 0, 2})), DomainError);

  const SystemModel tm = SystemModel::ten_moment();
  CHECK_FALSE(tm.admissible_prim(vec({1, 0, 0, 1, 2, 1})));
}

TEST_CASE("euler flux is homogeneous of degree one") {
  std::mt19937 rng(22);
  const SystemModel euler = SystemModel::euler(1.4);
  for (int t = 0; t < 100; ++t) {
    const StateVector u = euler.prim_to_cons(oracle::random_primitive(euler, rng));
    for (Direction d : {Direction::x, Direction::y}) {
      const StateVector f = euler.flux(u, d);
      CHECK(max_abs(euler.jacobian_vector(u, u, d) - f) <= 1e-10 * std::max(1.0, max_abs(f)));
    }
  }
}

TEST_CASE("wave speeds") {
  const SystemModel euler = SystemModel::euler(1.4);
  const auto [lo, hi] = euler.eigen_range_prim(vec({1, 0, 0, 1}), Direction::x);
  CHECK(lo == doctest::Approx(-std::sqrt(1.4)));
  CHECK(hi == doctest::Approx(std::sqrt(1.4)));

  for (double g : {4.0 / 3.0, 5.0 / 3.0}) {
    const SystemModel rhd = SystemModel::rhd(g);
    const double rho = 2.0, p = 0.7;
    const double h = 1.0 + g / (g - 1.0) * p / rho;
    const double cs = std::sqrt(g * p / (rho * h));
    CHECK(rhd.sound_speed_prim(vec({rho, 0, 0, p})) == doctest::Approx(cs).epsilon(1e-13));
    const auto [l, r] = rhd.eigen_range_prim(vec({rho, 0, 0, p}), Direction::y);
    CHECK(r == doctest::Approx(cs).epsilon(1e-13));
    CHECK(l == doctest::Approx(-cs).epsilon(1e-13));
  }

  // Ten-moment: u +- sqrt(3 pxx / rho) are the extreme speeds.
  const SystemModel tm = SystemModel::ten_moment();
  const auto [tl, tr] = tm.eigen_range_prim(vec({2, 0.5, 0, 1.5, 0.2, 1}), Direction::x);
  CHECK(tl == doctest::Approx(0.5 - 1.5).epsilon(1e-13));
  CHECK(tr == doctest::Approx(0.5 + 1.5).epsilon(1e-13));
}

TEST_CASE("eigensystems against a finite-difference Jacobian") {
  std::mt19937 rng(23);
  for (const SystemModel& sys : oracle::all_systems()) {
    const int n = sys.n_components();
    for (int t = 0; t < 100; ++t) {
      const StateVector u = sys.prim_to_cons(oracle::random_primitive(sys, rng));
      for (Direction d : {Direction::x, Direction::y}) {
        const Eigensystem es = sys.eigensystem(u, d);
        const StateMatrix a = oracle::fd_jacobian(sys, u, d);
        const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
        for (int k = 0; k < n; ++k) {
          const StateVector r = es.right.col(k);
          const StateVector res = a * r - es.lambda[k] * r;
          CHECK(max_abs(res) <= 1e-6 * scale * std::max(1.0, max_abs(r)));
          // Analytic directional derivative agrees with the FD matrix.
          CHECK(max_abs(sys.jacobian_vector(u, r, d) - a * r) <=
                1e-6 * scale * std::max(1.0, max_abs(r)));
        }
        const StateMatrix id = es.left * es.right;
        CHECK((id - StateMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
        for (int k = 1; k < n; ++k) CHECK(es.lambda[k] >= es.lambda[k - 1]);
      }
    }
  }
}

TEST_CASE("direction symmetry and reflection") {
  std::mt19937 rng(24);
  for (const SystemModel& sys : oracle::all_systems()) {
    for (int t = 0; t < 50; ++t) {
      const StateVector u = sys.prim_to_cons(oracle::random_primitive(sys, rng));
      StateVector p = u;
      sys.permute_xy(p);
      StateVector pp = p;
      sys.permute_xy(pp);
      CHECK(max_abs(pp - u) == 0.0);
      StateVector fy = sys.flux(p, Direction::x);
      sys.permute_xy(fy);
      CHECK(max_abs(fy - sys.flux(u, Direction::y)) <= 1e-12 * std::max(1.0, max_abs(fy)));

      const StateVector m = sys.reflect(u, Direction::x);
      CHECK(max_abs(sys.reflect(m, Direction::x) - u) == 0.0);
      const StateVector wm = sys.cons_to_prim(m), w = sys.cons_to_prim(u);
      CHECK(wm[1] == doctest::Approx(-w[1]).epsilon(1e-12));
      CHECK(wm[2] == doctest::Approx(w[2]).epsilon(1e-12));
    }
  }
}

TEST_CASE("signal speeds bracket both states") {
  std::mt19937 rng(25);
  for (const SystemModel& sys : oracle::all_systems()) {
    const StateVector wl = oracle::random_primitive(sys, rng);
    const StateVector wr = oracle::random_primitive(sys, rng);
    const auto [sl, sr] =
        sys.signal_speeds(sys.prim_to_cons(wl), sys.prim_to_cons(wr), Direction::x);
    for (const StateVector& w : {wl, wr}) {
      const auto [lo, hi] = sys.eigen_range_prim(w, Direction::x);
      CHECK(sl <= lo + 1e-14);
      CHECK(sr >= hi - 1e-14);
    }
  }
}
