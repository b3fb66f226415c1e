#include "afdweno/exact_riemann.hpp"
#include "afdweno/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>
#include <sstream>

using namespace afdweno;

namespace {

// One sampled point of a registered problem's initial data.
struct Sample {
  double x, y;
  std::vector<double> prim;
};

struct TableEntry {
  const char* name;
  double gamma;  // NaN when the system has none
  double t_end;
  std::vector<Sample> samples;
};

constexpr double kNoGamma = std::numeric_limits<double>::quiet_NaN();

// Independent copies of the reference initial states.
const std::vector<TableEntry>& tables() {
  static const std::vector<TableEntry> t = {
      // Euler, 1D.
      {"euler-sod", 1.4, 0.2, {{-0.3, 0, {1, 0, 0, 1}}, {0.3, 0, {0.125, 0, 0, 0.1}}}},
      {"euler-lax", 1.4, 0.13,
       {{-0.3, 0, {0.445, 0.698, 0, 3.528}}, {0.3, 0, {0.5, 0, 0, 0.571}}}},
      {"euler-blast", 1.4, 0.038,
       {{-0.45, 0, {1, 0, 0, 1000}}, {0.0, 0, {1, 0, 0, 0.01}}, {0.45, 0, {1, 0, 0, 100}}}},
      // RHD, 1D.
      {"rhd-1", 5.0 / 3.0, 0.4, {{-0.3, 0, {1, -0.6, 0, 10}}, {0.3, 0, {10, 0.5, 0, 20}}}},
      {"rhd-2", 5.0 / 3.0, 0.4, {{-0.3, 0, {10, 0, 0, 40.0 / 3.0}}, {0.3, 0, {1, 0, 0, 1e-6}}}},
      {"rhd-3", 5.0 / 3.0, 0.4, {{-0.3, 0, {1, 0, 0, 1e3}}, {0.3, 0, {1, 0, 0, 1e-2}}}},
      {"rhd-4", 4.0 / 3.0, 0.4, {{-0.3, 0, {1, 0.9, 0, 1}}, {0.3, 0, {1, 0, 0, 10}}}},
      {"rhd-5", 5.0 / 3.0, 0.4, {{-0.3, 0, {1, -0.7, 0, 20}}, {0.3, 0, {1, 0.7, 0, 20}}}},
      {"rhd-6", 1.4, 0.43,
       {{-0.45, 0, {1, 0, 0, 1000}}, {0.0, 0, {1, 0, 0, 0.01}}, {0.45, 0, {1, 0, 0, 100}}}},
      {"rhd-7", 5.0 / 3.0, 0.35,
       {{-0.3, 0, {5, 0, 0, 50}},
        {0.3, 0, {2 + 0.3 * std::sin(50 * 0.3), 0, 0, 5}},
        {0.11, 0, {2 + 0.3 * std::sin(50 * 0.11), 0, 0, 5}}}},
      // Ten-moment, 1D.
      {"tenmoment-1", kNoGamma, 0.125,
       {{-0.3, 0, {1, 0, 0, 2, 0.05, 0.6}}, {0.3, 0, {0.125, 0, 0, 0.2, 0.1, 0.2}}}},
      {"tenmoment-2", kNoGamma, 0.125,
       {{-0.3, 0, {1, 1, 1, 1, 0, 1}}, {0.3, 0, {1, -1, -1, 1, 0, 1}}}},
      {"tenmoment-3", kNoGamma, 0.15,
       {{-0.3, 0, {2, -0.5, -0.5, 1.5, 0.5, 1.5}}, {0.3, 0, {1, 1, 1, 1, 0, 1}}}},
      // RHD 2D Riemann problems: NE, NW, SW, SE.
      {"rhd-2drp-1", 5.0 / 3.0, 0.4,
       {{0.25, 0.25, {0.5, 0.5, -0.5, 5}},
        {-0.25, 0.25, {1, 0.5, 0.5, 5}},
        {-0.25, -0.25, {3, -0.5, 0.5, 5}},
        {0.25, -0.25, {1.5, -0.5, -0.5, 5}}}},
      {"rhd-2drp-2", 5.0 / 3.0, 0.4,
       {{0.25, 0.25, {1, 0, 0, 1}},
        {-0.25, 0.25, {0.5771, -0.3529, 0, 0.4}},
        {-0.25, -0.25, {1, -0.3529, -0.3529, 1}},
        {0.25, -0.25, {0.5771, 0, -0.3529, 0.4}}}},
      {"rhd-2drp-3", 5.0 / 3.0, 0.4,
       {{0.25, 0.25, {0.0351452161, 0, 0, 0.1629310565}},
        {-0.25, 0.25, {0.1, 0.7, 0, 1}},
        {-0.25, -0.25, {0.5, 0, 0, 1}},
        {0.25, -0.25, {0.1, 0, 0.7, 1}}}},
      // Shock-bubble interaction: pre-shock gas, shocked gas, bubble.
      {"rhd-shock-bubble-1", 5.0 / 3.0, 450,
       {{100, 30, {1, 0, 0, 0.05}},
        {300, 0, {1.86522508063, -0.19678110737, 0, 0.15}},
        {215, 10, {0.1358, 0, 0, 0.05}}}},
      {"rhd-shock-bubble-2", 5.0 / 3.0, 500,
       {{100, 30, {1, 0, 0, 0.05}},
        {300, 0, {1.86522508063, -0.19678110737, 0, 0.15}},
        {215, 10, {3.1538, 0, 0, 0.05}}}},
  };
  return t;
}

const ProblemSpec& sod() { return find_problem("euler-sod"); }

}  // namespace

TEST_CASE("registry matches the reference initial states") {
  for (const TableEntry& e : tables()) {
    CAPTURE(e.name);
    const ProblemSpec& p = find_problem(e.name);
    CHECK(p.t_end == e.t_end);
    if (!std::isnan(e.gamma)) CHECK(p.gamma == e.gamma);
    for (const Sample& s : e.samples) {
      const StateVector w = p.initial(s.x, s.y);
      REQUIRE(w.size() == int(s.prim.size()));
      for (int k = 0; k < w.size(); ++k) CHECK(w[k] == s.prim[k]);
    }
    // Domains are [-1/2, 1/2] (squared in 2D) except the shock-bubble box.
    if (std::string(e.name).rfind("rhd-shock-bubble", 0) == 0) {
      CHECK(p.x_min == 0.0);
      CHECK(p.x_max == 325.0);
      CHECK(p.y_min == -45.0);
      CHECK(p.y_max == 45.0);
    } else {
      CHECK(p.x_min == -0.5);
      CHECK(p.x_max == 0.5);
    }
  }
  const ProblemSpec& sb = find_problem("rhd-shock-bubble-1");
  CHECK(sb.left.kind == BcKind::dirichlet);
  CHECK(sb.right.kind == BcKind::dirichlet);
  CHECK(sb.right.state[0] == 1.86522508063);
  CHECK(sb.bottom.kind == BcKind::reflective);
  CHECK(find_problem("euler-blast").default_nx == 1000);
  CHECK(find_problem("euler-blast").flattener);
  CHECK(find_problem("rhd-6").default_nx == 4000);
  CHECK(find_problem("rhd-7").default_nx == 400);
  CHECK(find_problem("rhd-2drp-1").default_nx == 200);
  CHECK(find_problem("rhd-2drp-1").default_ny == 200);
  const ProblemSpec& vac = find_problem("tenmoment-vacuum");
  CHECK(vac.kappa == 1.0);
  CHECK(vac.t_end == 0.05);
  const StateVector wv = vac.initial(0.3, 0.4);
  CHECK(wv[1] == doctest::Approx(8 * 0.6));
  CHECK(wv[2] == doctest::Approx(8 * 0.8));
  CHECK(wv[3] == 2.0);
}

TEST_CASE("registry lookups") {
  std::set<std::string> names;
  for (const ProblemSpec& p : problem_registry()) {
    CHECK(names.insert(p.name).second);
    CHECK_FALSE(p.description.empty());
    CHECK(p.t_end > 0.0);
    CHECK(p.initial);
  }
  CHECK(names.size() >= 25);
  CHECK_THROWS_AS(find_problem("nope"), UsageError);
  try {
    find_problem("nope");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("euler-sod") != std::string::npos);
  }
}

TEST_CASE("exact Euler Riemann solver") {
  const ExactEulerRiemann s({1, 0, 1}, {0.125, 0, 0.1}, 1.4);
  CHECK(s.p_star() == doctest::Approx(0.30313).epsilon(1e-5));
  CHECK(s.u_star() == doctest::Approx(0.92745).epsilon(1e-5));
  CHECK(std::abs(s.residual()) < 1e-12);
  const Primitive1D far_left = s.sample(-10.0), far_right = s.sample(10.0);
  CHECK(far_left.rho == 1.0);
  CHECK(far_right.p == 0.1);
  const Primitive1D same = exact_euler_riemann({2, 0.3, 1.5}, {2, 0.3, 1.5}, 1.4, 0.17);
  CHECK(same.rho == doctest::Approx(2.0));
  CHECK(same.u == doctest::Approx(0.3));
  CHECK(same.p == doctest::Approx(1.5));
  // Strong two-rarefaction data producing vacuum are rejected.
  CHECK_THROWS_AS(ExactEulerRiemann({1, -10, 1}, {1, 10, 1}, 1.4), DomainError);
}

TEST_CASE("error norms and observed order") {
  const std::vector<double> a = {1, 2, 3, 4}, b = {1, 2, 3, 4};
  const ErrorNorms z = error_norms(a, b);
  CHECK(z.l1 == 0.0);
  CHECK(z.linf == 0.0);
  const std::vector<double> c = {1.5, 2.5, 3.5, 4.5};
  const ErrorNorms k = error_norms(a, c);
  CHECK(k.l1 == doctest::Approx(0.5));
  CHECK(k.linf == doctest::Approx(0.5));
  CHECK(observed_order(1.01690e-3, 1.55293e-4) == doctest::Approx(2.71).epsilon(0.002));
  CHECK_THROWS_AS(error_norms(a, std::vector<double>{1, 2}), UsageError);
  CHECK_THROWS_AS(error_norms(std::vector<double>{}, std::vector<double>{}), UsageError);
}

TEST_CASE("accuracy-study integrator pairing") {
  TimeIntegratorConfig c;
  accuracy_study_integrator(3, c);
  CHECK(c.scheme == RkScheme::ssp_rk3);
  accuracy_study_integrator(5, c);
  CHECK(c.scheme == RkScheme::ssp_rk4);
  CHECK(c.dt_refinement_exponent == 1.25);
  accuracy_study_integrator(9, c);
  CHECK(c.dt_refinement_exponent == 2.25);
}

TEST_CASE("sod run stays within the exact envelope") {
  RunConfig c = default_run_config(sod(), 5);
  c.nx = 200;
  const RunResult r = run_problem(sod(), c);
  CHECK(r.t == 0.2);
  const SystemModel sys = sod().make_system();
  for (int i = 0; i < 200; ++i) {
    const StateVector w = sys.cons_to_prim(r.state.get(i));
    CHECK(w[0] >= 0.105);
    CHECK(w[0] <= 1.02);
    CHECK(w[3] > 0.0);
  }
  const ErrorNorms e = solution_error(r.state, sys, sod().exact, r.t);
  CHECK(e.l1 < 1e-2);
  bool has_steps = false;
  for (const auto& [k, v] : r.metadata) has_steps |= k == "steps";
  CHECK(has_steps);
}

TEST_CASE("zero stop time returns the initial data") {
  for (const char* name : {"euler-sod", "rhd-7", "tenmoment-1", "euler-vortex"}) {
    const ProblemSpec& p = find_problem(name);
    RunConfig c = default_run_config(p);
    c.nx = 32;
    c.ny = p.two_d ? 32 : 0;
    c.t_end = 0.0;
    const RunResult r = run_problem(p, c);
    const SystemModel sys = p.make_system();
    const StateArray u0 = initial_state(p, sys, r.state.grid());
    CHECK(r.steps == 0);
    for (int j = 0; j < r.state.grid().ny(); ++j)
      for (int i = 0; i < r.state.grid().nx(); ++i)
        CHECK((r.state.get(i, j) - u0.get(i, j)).cwiseAbs().maxCoeff() == 0.0);
    if (p.exact) {
      const ErrorNorms e = solution_error(r.state, sys, p.exact, 0.0);
      CHECK(e.l1 < 1e-14);
    }
  }
}

TEST_CASE("convergence rows satisfy the order formula") {
  const ProblemSpec& p = find_problem("euler-advection");
  RunConfig c = default_run_config(p, 5);
  accuracy_study_integrator(5, c.integrator);
  c.t_end = 0.1;
  const std::vector<int> meshes = {16, 32, 64};
  const auto rows = convergence_study(p, c, meshes);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].l1_order);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    REQUIRE(rows[k].l1_order);
    const double lhs = rows[k].l1_error * std::pow(2.0, *rows[k].l1_order);
    CHECK(std::abs(lhs - rows[k - 1].l1_error) <= 1e-12 * rows[k - 1].l1_error);
    CHECK(*rows[k].l1_order > 4.0);
  }
  std::ostringstream os;
  write_convergence_csv(os, rows);
  CHECK(os.str().rfind("mesh,l1_error,l1_order,linf_error,linf_order\n", 0) == 0);
}

TEST_CASE("runs are deterministic and CSV output is well formed") {
  RunConfig c = default_run_config(sod(), 7);
  c.nx = 64;
  const SystemModel sys = sod().make_system();
  std::ostringstream a, b;
  write_solution_csv(a, run_problem(sod(), c).state, sys);
  write_solution_csv(b, run_problem(sod(), c).state, sys);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,rho,vx,vy,p");
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 64);
  CHECK(snapshot_name("euler-sod", 5, 200, 1) == "euler-sod_5_200.csv");
  CHECK(snapshot_name("rhd-2drp-1", 7, 200, 200) == "rhd-2drp-1_7_200x200.csv");
}

TEST_CASE("metadata output") {
  std::ostringstream os;
  write_metadata(os, {{"order", "5"}, {"riemann", "llf"}});
  CHECK(os.str() == "order = 5\nriemann = llf\n");
}
