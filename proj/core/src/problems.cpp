#include "afdweno/problems.hpp"

#include "afdweno/exact_riemann.hpp"

#include <cmath>
#include <numbers>

namespace afdweno {

namespace {

using std::numbers::pi;

StateVector hydro(double rho, double vx, double vy, double p) {
  StateVector w(4);
  w << rho, vx, vy, p;
  return w;
}

StateVector tm(double rho, double vx, double vy, double pxx, double pxy, double pyy) {
  StateVector w(6);
  w << rho, vx, vy, pxx, pxy, pyy;
  return w;
}

EdgeSpec edge(BcKind kind) {
  EdgeSpec e;
  e.kind = kind;
  return e;
}

EdgeSpec dirichlet(const StateVector& w) {
  EdgeSpec e;
  e.kind = BcKind::dirichlet;
  e.state = w;
  return e;
}

void set_edges(ProblemSpec& p, BcKind kind) {
  p.left = p.right = p.bottom = p.top = edge(kind);
}

// Two-state shock tube on [-0.5, 0.5] with the jump at x = 0.
ProblemSpec shock_tube(std::string name, std::string description, SystemKind system, double gamma,
                       const StateVector& left, const StateVector& right, double t_end) {
  ProblemSpec p;
  p.name = std::move(name);
  p.description = std::move(description);
  p.system = system;
  p.gamma = gamma;
  p.x_min = -0.5;
  p.x_max = 0.5;
  p.initial = [left, right](double x, double) { return x < 0.0 ? left : right; };
  set_edges(p, BcKind::outflow);
  p.t_end = t_end;
  p.default_nx = 400;
  return p;
}

ProblemSpec blast(std::string name, std::string description, SystemKind system, double gamma,
                  double t_end) {
  ProblemSpec p = shock_tube(std::move(name), std::move(description), system, gamma,
                             hydro(1, 0, 0, 1000), hydro(1, 0, 0, 100), t_end);
  p.initial = [](double x, double) {
    if (x < -0.4) return hydro(1, 0, 0, 1000);
    if (x > 0.4) return hydro(1, 0, 0, 100);
    return hydro(1, 0, 0, 0.01);
  };
  p.left = p.right = edge(BcKind::reflective);
  p.flattener = true;
  return p;
}

void attach_exact_riemann(ProblemSpec& p, const StateVector& left, const StateVector& right) {
  const ExactEulerRiemann rp({left[0], left[1], left[3]}, {right[0], right[1], right[3]}, p.gamma);
  const PrimitiveField init = p.initial;
  p.exact = [rp, init](double x, double y, double t) {
    if (t <= 0.0) return init(x, y);
    const Primitive1D s = rp.sample(x / t);
    return hydro(s.rho, s.u, 0.0, s.p);
  };
}

// Four-quadrant problem on [-0.5, 0.5]^2; states listed NE, NW, SW, SE.
ProblemSpec quadrants(std::string name, std::string description, const StateVector& ne,
                      const StateVector& nw, const StateVector& sw, const StateVector& se,
                      int order) {
  ProblemSpec p;
  p.name = std::move(name);
  p.description = std::move(description);
  p.system = SystemKind::rhd;
  p.gamma = 5.0 / 3.0;
  p.x_min = p.y_min = -0.5;
  p.x_max = p.y_max = 0.5;
  p.two_d = true;
  p.initial = [=](double x, double y) {
    if (y > 0.0) return x > 0.0 ? ne : nw;
    return x < 0.0 ? sw : se;
  };
  set_edges(p, BcKind::outflow);
  p.t_end = 0.4;
  p.default_nx = p.default_ny = 200;
  p.default_order = order;
  p.cfl = 0.4;
  return p;
}

// Isentropic vortex advected diagonally across the periodic [-5,5]^2 box.
ProblemSpec euler_vortex() {
  ProblemSpec p;
  p.name = "euler-vortex";
  p.description = "2D isentropic Euler vortex, strength 5, advected with velocity (1,1)";
  p.system = SystemKind::euler;
  p.gamma = 1.4;
  p.x_min = p.y_min = -5.0;
  p.x_max = p.y_max = 5.0;
  p.two_d = true;
  const double g = p.gamma, eps = 5.0;
  auto field = [g, eps](double x, double y, double t) {
    // Nearest periodic image of the displacement from the vortex centre.
    auto wrap = [](double s) { return s - 10.0 * std::floor((s + 5.0) / 10.0); };
    const double dx = wrap(x - t), dy = wrap(y - t);
    const double r2 = dx * dx + dy * dy;
    const double du = eps / (2.0 * pi) * std::exp(0.5 * (1.0 - r2));
    const double temp = 1.0 - (g - 1.0) * eps * eps / (8.0 * g * pi * pi) * std::exp(1.0 - r2);
    const double rho = std::pow(temp, 1.0 / (g - 1.0));
    return hydro(rho, 1.0 - du * dy, 1.0 + du * dx, rho * temp);
  };
  p.initial = [field](double x, double y) { return field(x, y, 0.0); };
  p.exact = field;
  set_edges(p, BcKind::periodic);
  p.t_end = 10.0;
  p.default_nx = p.default_ny = 64;
  p.cfl = 0.4;
  return p;
}

// Steady rotating relativistic vortex, isentropic with p = rho^gamma, in
// radial equilibrium dp/dr = rho h u_phi^2 / r where u_phi = Gamma v_phi:
//   u_phi^2 = a^2 r^2 exp(1 - r^2),  h = h_inf exp(-a^2 exp(1 - r^2) / 2),
// a = eps / (2 pi). It is then Lorentz-boosted with velocity (vb, vb).
ProblemSpec rhd_vortex() {
  ProblemSpec p;
  p.name = "rhd-vortex";
  p.description =
      "2D relativistic isentropic vortex (strength 5, p = rho^gamma) boosted with v = (0.5, 0.5)";
  p.system = SystemKind::rhd;
  p.gamma = 5.0 / 3.0;
  p.x_min = p.y_min = -5.0;
  p.x_max = p.y_max = 5.0;
  p.two_d = true;
  const double g = p.gamma, a = 5.0 / (2.0 * pi), vb = 0.5;
  auto field = [g, a, vb](double x, double y, double t) {
    const double v2b = 2.0 * vb * vb;
    const double gb = 1.0 / std::sqrt(1.0 - v2b);
    auto wrap = [](double s) { return s - 10.0 * std::floor((s + 5.0) / 10.0); };
    const double lx = wrap(x - vb * t), ly = wrap(y - vb * t);
    // Rest-frame position: stretch the component along the boost.
    const double n = 1.0 / std::sqrt(2.0);
    const double par = (lx + ly) * n, perp = (ly - lx) * n;
    const double rx = (gb * par - perp) * n, ry = (gb * par + perp) * n;
    const double r2 = rx * rx + ry * ry;
    const double e = std::exp(1.0 - r2);
    const double u_phi = a * std::sqrt(r2 * e);
    const double h_inf = 1.0 + g / (g - 1.0);
    const double h = h_inf * std::exp(-0.5 * a * a * e);
    const double rho = std::pow((h - 1.0) * (g - 1.0) / g, 1.0 / (g - 1.0));
    const double pres = std::pow(rho, g);
    // Rest-frame three-velocity.
    const double r = std::sqrt(r2);
    const double vphi = u_phi / std::sqrt(1.0 + u_phi * u_phi);
    const double ux = r > 0.0 ? -vphi * ry / r : 0.0, uy = r > 0.0 ? vphi * rx / r : 0.0;
    // Relativistic velocity addition with boost V = (vb, vb).
    const double vdotu = vb * (ux + uy);
    const double k = gb / (gb + 1.0) * vdotu;
    const double vx = (ux / gb + vb + k * vb) / (1.0 + vdotu);
    const double vy = (uy / gb + vb + k * vb) / (1.0 + vdotu);
    return hydro(rho, vx, vy, pres);
  };
  p.initial = [field](double x, double y) { return field(x, y, 0.0); };
  p.exact = field;
  set_edges(p, BcKind::periodic);
  p.t_end = 2.0;
  p.default_nx = p.default_ny = 64;
  p.cfl = 0.4;
  return p;
}

// Density wave advected along the diagonal of the periodic unit box.
ProblemSpec tenmoment_sine() {
  ProblemSpec p;
  p.name = "tenmoment-sine2d";
  p.description = "2D ten-moment density wave rho = 2 + sin(2 pi (x + y - 2t)), v = (1,1)";
  p.system = SystemKind::ten_moment;
  p.x_min = p.y_min = -0.5;
  p.x_max = p.y_max = 0.5;
  p.two_d = true;
  p.exact = [](double x, double y, double t) {
    return tm(2.0 + std::sin(2.0 * pi * (x + y - 2.0 * t)), 1, 1, 1, 0, 1);
  };
  p.initial = [f = p.exact](double x, double y) { return f(x, y, 0.0); };
  set_edges(p, BcKind::periodic);
  p.t_end = 0.5;
  p.default_nx = p.default_ny = 32;
  p.default_order = 5;
  p.cfl = 0.4;
  return p;
}

ProblemSpec euler_advection() {
  ProblemSpec p;
  p.name = "euler-advection";
  p.description = "1D Euler density wave rho = 1 + 0.2 sin(2 pi (x - t)), v = 1, p = 1";
  p.system = SystemKind::euler;
  p.x_min = 0.0;
  p.x_max = 1.0;
  p.exact = [](double x, double, double t) {
    return hydro(1.0 + 0.2 * std::sin(2.0 * pi * (x - t)), 1, 0, 1);
  };
  p.initial = [f = p.exact](double x, double y) { return f(x, y, 0.0); };
  set_edges(p, BcKind::periodic);
  p.t_end = 1.0;
  p.default_nx = 64;
  p.cfl = 0.4;
  return p;
}

ProblemSpec forward_step() {
  ProblemSpec p;
  p.name = "euler-ffs";
  p.description = "Mach 3 flow over a forward-facing step at (0.6, 0.2)";
  p.system = SystemKind::euler;
  p.gamma = 1.4;
  p.x_min = 0.0;
  p.x_max = 3.0;
  p.y_min = 0.0;
  p.y_max = 1.0;
  p.two_d = true;
  p.initial = [](double, double) { return hydro(1.4, 3.0, 0.0, 1.0); };
  p.left = p.right = edge(BcKind::outflow);
  p.bottom = p.top = edge(BcKind::reflective);
  p.t_end = 0.4;
  p.default_nx = 1440;
  p.default_ny = 480;
  p.riemann = RiemannSolver::hll;
  p.cfl = 0.4;
  p.flattener = true;
  p.obstacle = StepObstacle{0.6, 0.2};
  p.corner_fix = true;
  return p;
}

ProblemSpec double_mach() {
  ProblemSpec p;
  p.name = "euler-dmr";
  p.description = "Double Mach reflection of a Mach 10 shock at 60 degrees";
  p.system = SystemKind::euler;
  p.gamma = 1.4;
  p.x_min = 0.0;
  p.x_max = 4.0;
  p.y_min = 0.0;
  p.y_max = 1.0;
  p.two_d = true;
  const double c30 = std::cos(pi / 6.0), s30 = std::sin(pi / 6.0);
  const StateVector post = hydro(8.0, 8.25 * c30, -8.25 * s30, 116.5);
  const StateVector pre = hydro(1.4, 0.0, 0.0, 1.0);
  const double x0 = 1.0 / 6.0;
  p.initial = [=](double x, double y) { return x < x0 + y / std::sqrt(3.0) ? post : pre; };
  p.left = dirichlet(post);
  p.right = edge(BcKind::outflow);
  p.bottom = dirichlet(post);
  p.bottom.kind = BcKind::dmr_bottom;
  p.bottom.x0 = x0;
  p.top.kind = BcKind::dmr_top;
  p.top.state = post;
  p.top.state_alt = pre;
  p.top.x0 = x0;
  p.top.speed = 20.0 / std::sqrt(3.0);
  p.t_end = 0.2;
  p.default_nx = 1920;
  p.default_ny = 480;
  p.default_order = 7;
  p.riemann = RiemannSolver::hll;
  p.cfl = 0.4;
  p.flattener = true;
  return p;
}

ProblemSpec shock_bubble(int which) {
  ProblemSpec p;
  p.name = "rhd-shock-bubble-" + std::to_string(which);
  p.description = which == 1 ? "Relativistic shock hitting a light bubble"
                             : "Relativistic shock hitting a heavy bubble";
  p.system = SystemKind::rhd;
  p.gamma = 5.0 / 3.0;
  p.x_min = 0.0;
  p.x_max = 325.0;
  p.y_min = -45.0;
  p.y_max = 45.0;
  p.two_d = true;
  const StateVector ahead = hydro(1, 0, 0, 0.05);
  const StateVector behind = hydro(1.86522508063, -0.19678110737, 0, 0.15);
  const StateVector bubble = hydro(which == 1 ? 0.1358 : 3.1538, 0, 0, 0.05);
  p.initial = [=](double x, double y) {
    if (x > 265.0) return behind;
    if ((x - 215.0) * (x - 215.0) + y * y < 25.0 * 25.0) return bubble;
    return ahead;
  };
  p.left = dirichlet(ahead);
  p.right = dirichlet(behind);
  p.bottom = p.top = edge(BcKind::reflective);
  p.t_end = which == 1 ? 450.0 : 500.0;
  p.default_nx = 650;
  p.default_ny = 180;
  p.cfl = 0.4;
  return p;
}

ProblemSpec tenmoment_vacuum() {
  ProblemSpec p;
  p.name = "tenmoment-vacuum";
  p.description = "Ten-moment radially expanding flow creating a near-vacuum centre";
  p.system = SystemKind::ten_moment;
  p.x_min = p.y_min = -2.0;
  p.x_max = p.y_max = 2.0;
  p.two_d = true;
  p.initial = [](double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    return tm(1.0, 8.0 * x / r, 8.0 * y / r, 2.0, 0.0, 2.0);
  };
  set_edges(p, BcKind::outflow);
  p.t_end = 0.05;
  p.default_nx = p.default_ny = 200;
  p.default_order = 7;
  p.cfl = 0.4;
  p.flattener = true;
  p.kappa = 1.0;
  return p;
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> r;
  const SystemKind eu = SystemKind::euler, rh = SystemKind::rhd, ten = SystemKind::ten_moment;

  {
    const StateVector l = hydro(1, 0, 0, 1), rr = hydro(0.125, 0, 0, 0.1);
    ProblemSpec p = shock_tube("euler-sod", "Sod shock tube", eu, 1.4, l, rr, 0.2);
    p.default_nx = 200;
    attach_exact_riemann(p, l, rr);
    r.push_back(p);
  }
  {
    const StateVector l = hydro(0.445, 0.698, 0, 3.528), rr = hydro(0.5, 0, 0, 0.571);
    ProblemSpec p = shock_tube("euler-lax", "Lax shock tube", eu, 1.4, l, rr, 0.13);
    p.default_nx = 200;
    p.default_order = 7;
    attach_exact_riemann(p, l, rr);
    r.push_back(p);
  }
  {
    ProblemSpec p = blast("euler-blast", "Woodward-Colella interacting blast waves", eu, 1.4, 0.038);
    p.default_nx = 1000;
    p.default_order = 9;
    r.push_back(p);
  }
  r.push_back(euler_advection());
  r.push_back(euler_vortex());
  r.push_back(forward_step());
  r.push_back(double_mach());

  const double g53 = 5.0 / 3.0;
  {
    ProblemSpec p = shock_tube("rhd-1", "RHD Riemann problem 1", rh, g53, hydro(1, -0.6, 0, 10),
                               hydro(10, 0.5, 0, 20), 0.4);
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("rhd-2", "RHD Riemann problem 2 (strong blast)", rh, g53,
                               hydro(10, 0, 0, 40.0 / 3.0), hydro(1, 0, 0, 1e-6), 0.4);
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("rhd-3", "RHD Riemann problem 3 (narrow shell)", rh, g53,
                               hydro(1, 0, 0, 1e3), hydro(1, 0, 0, 1e-2), 0.4);
    p.default_order = 7;
    p.flattener = true;
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("rhd-4", "RHD Riemann problem 4 (reflected shock)", rh, 4.0 / 3.0,
                               hydro(1, 0.9, 0, 1), hydro(1, 0, 0, 10), 0.4);
    p.default_order = 7;
    p.flattener = true;
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("rhd-5", "RHD Riemann problem 5 (two rarefactions)", rh, g53,
                               hydro(1, -0.7, 0, 20), hydro(1, 0.7, 0, 20), 0.4);
    p.default_order = 9;
    p.flattener = true;
    r.push_back(p);
  }
  {
    ProblemSpec p = blast("rhd-6", "RHD interacting blast waves", rh, 1.4, 0.43);
    p.default_nx = 4000;
    p.default_order = 9;
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("rhd-7", "RHD shock hitting a density sine wave", rh, g53,
                               hydro(5, 0, 0, 50), hydro(2, 0, 0, 5), 0.35);
    p.initial = [](double x, double) {
      return x < 0.0 ? hydro(5, 0, 0, 50) : hydro(2.0 + 0.3 * std::sin(50.0 * x), 0, 0, 5);
    };
    p.default_nx = 400;
    p.default_order = 7;
    r.push_back(p);
  }
  r.push_back(rhd_vortex());
  r.push_back(quadrants("rhd-2drp-1", "RHD 2D Riemann problem 1 (vortex sheets)",
                        hydro(0.5, 0.5, -0.5, 5), hydro(1, 0.5, 0.5, 5),
                        hydro(3, -0.5, 0.5, 5), hydro(1.5, -0.5, -0.5, 5), 5));
  r.push_back(quadrants("rhd-2drp-2", "RHD 2D Riemann problem 2 (rarefactions)",
                        hydro(1, 0, 0, 1), hydro(0.5771, -0.3529, 0, 0.4),
                        hydro(1, -0.3529, -0.3529, 1), hydro(0.5771, 0, -0.3529, 0.4), 7));
  r.push_back(quadrants("rhd-2drp-3", "RHD 2D Riemann problem 3 (shocks and contacts)",
                        hydro(0.0351452161, 0, 0, 0.1629310565), hydro(0.1, 0.7, 0, 1),
                        hydro(0.5, 0, 0, 1), hydro(0.1, 0, 0.7, 1), 9));
  r.push_back(shock_bubble(1));
  r.push_back(shock_bubble(2));

  {
    ProblemSpec p = shock_tube("tenmoment-1", "Ten-moment Sod problem", ten, 3.0,
                               tm(1, 0, 0, 2, 0.05, 0.6), tm(0.125, 0, 0, 0.2, 0.1, 0.2), 0.125);
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("tenmoment-2", "Ten-moment two-shock problem", ten, 3.0,
                               tm(1, 1, 1, 1, 0, 1), tm(1, -1, -1, 1, 0, 1), 0.125);
    p.default_order = 7;
    r.push_back(p);
  }
  {
    ProblemSpec p = shock_tube("tenmoment-3", "Ten-moment two-rarefaction problem", ten, 3.0,
                               tm(2, -0.5, -0.5, 1.5, 0.5, 1.5), tm(1, 1, 1, 1, 0, 1), 0.15);
    p.default_order = 9;
    r.push_back(p);
  }
  r.push_back(tenmoment_sine());
  r.push_back(tenmoment_vacuum());
  return r;
}

}  // namespace

SystemModel ProblemSpec::make_system() const {
  switch (system) {
    case SystemKind::euler: return SystemModel::euler(gamma);
    case SystemKind::rhd: return SystemModel::rhd(gamma);
    case SystemKind::ten_moment: return SystemModel::ten_moment();
  }
  throw UsageError("unknown system");
}

BoundaryConditions ProblemSpec::boundary_conditions(const SystemModel& sys) const {
  auto convert = [&](const EdgeSpec& e) {
    EdgeBc b;
    b.kind = e.kind;
    if (e.state.size()) b.state = sys.prim_to_cons(e.state);
    if (e.state_alt.size()) b.state_alt = sys.prim_to_cons(e.state_alt);
    b.x0 = e.x0;
    b.speed = e.speed;
    return b;
  };
  BoundaryConditions bc;
  bc.left = convert(left);
  bc.right = convert(right);
  bc.bottom = convert(bottom);
  bc.top = convert(top);
  return bc;
}

const std::vector<ProblemSpec>& problem_registry() {
  static const std::vector<ProblemSpec> registry = build_registry();
  return registry;
}

const ProblemSpec& find_problem(const std::string& name) {
  for (const auto& p : problem_registry())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : problem_registry()) known += (known.empty() ? "" : ", ") + p.name;
  throw UsageError("unknown problem '" + name + "'; known problems: " + known);
}

}  // namespace afdweno
