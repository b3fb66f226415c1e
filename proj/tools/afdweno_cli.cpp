// afdweno: run problems, convergence studies and coefficient derivation.

#include "afdweno/correction.hpp"
#include "afdweno/harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace afdweno;

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Flat `key = value` file; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(n) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

// Appends `--key value` for every config entry not already given as a flag,
// so command-line flags take precedence over the file.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
    else if (args[k].rfind("--config=", 0) == 0) path = args[k].substr(9);
  }
  if (path.empty()) return args;
  for (const auto& [key, value] : read_config(path)) {
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (!given) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

bool on_off(const std::string& v) { return v == "on"; }

void parse_zones(const std::string& s, int& nx, int& ny) {
  const auto x = s.find('x');
  try {
    nx = std::stoi(s.substr(0, x));
    ny = x == std::string::npos ? 0 : std::stoi(s.substr(x + 1));
  } catch (const std::exception&) {
    throw UsageError("bad --zones value '" + s + "', expected NX or NXxNY");
  }
  if (nx <= 0 || ny < 0) throw UsageError("zone counts must be positive");
}

struct SchemeFlags {
  int order = 0;
  std::string riemann;
  double cfl = 0.0;
  std::string flattener;
  double kappa = 0.0;
  std::string rk;
  std::string char_boundary = "off";
  std::string char_center = "on";
  std::string variant7;
  double gamma_hi = 0.85, gamma_avg = 0.85, gamma_lo = 0.85, eps = 1e-12;
  std::string positivity = "on";

  void add(CLI::App* app) {
    app->add_option("--order", order, "Scheme order")->check(CLI::IsMember({3, 5, 7, 9}));
    app->add_option("--riemann", riemann, "Riemann solver")->check(CLI::IsMember({"llf", "hll"}));
    app->add_option("--cfl", cfl, "CFL number in (0,1)");
    app->add_option("--flattener", flattener, "Flattener")->check(CLI::IsMember({"on", "off"}));
    app->add_option("--kappa", kappa, "Flattener threshold");
    app->add_option("--rk", rk, "Time integrator")->check(CLI::IsMember({"rk3", "rk4"}));
    app->add_option("--characteristic-boundary", char_boundary,
                    "Project w onto the resolved-state eigenvectors")
        ->check(CLI::IsMember({"on", "off"}));
    app->add_option("--characteristic-center", char_center,
                    "Interpolate interface states in characteristic variables")
        ->check(CLI::IsMember({"on", "off"}));
    app->add_option("--order7-variant", variant7, "Order-7 centre interpolation")
        ->check(CLI::IsMember({"ao73", "ao753"}));
    app->add_option("--gamma-hi", gamma_hi, "Linear weight of the largest stencil");
    app->add_option("--gamma-avg", gamma_avg, "Linear weight of intermediate stencils");
    app->add_option("--gamma-lo", gamma_lo, "Linear weight of the centred small stencil");
    app->add_option("--eps", eps, "Smoothness regularization");
    app->add_option("--positivity-fallback", positivity, "Fall back to zone values")
        ->check(CLI::IsMember({"on", "off"}));
  }

  void apply(RunConfig& c) const {
    if (!riemann.empty()) c.scheme.riemann = parse_riemann_solver(riemann);
    if (cfl > 0.0) c.integrator.cfl = cfl;
    if (!flattener.empty()) c.scheme.flattener = on_off(flattener);
    if (kappa > 0.0) c.scheme.kappa = kappa;
    if (!rk.empty()) c.integrator.scheme = parse_rk_scheme(rk);
    c.scheme.characteristic_boundary = on_off(char_boundary);
    c.scheme.characteristic_center = on_off(char_center);
    if (variant7 == "ao753") c.scheme.weno.order7_variant = CenterVariant::ao753;
    c.scheme.weno.gamma_hi = gamma_hi;
    c.scheme.weno.gamma_avg = gamma_avg;
    c.scheme.weno.gamma_lo = gamma_lo;
    c.scheme.weno.eps = eps;
    c.scheme.positivity_fallback = on_off(positivity);
  }
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AFD-WENO solver: runs, convergence studies and correction coefficients"};
  app.require_subcommand(1);
  std::string config_path;

  SchemeFlags run_flags, conv_flags;
  std::string run_problem_name, zones, out, t_end_str;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "Integrate one problem and write a CSV snapshot");
  run->add_option("--config", config_path, "Flat key = value file; flags win");
  run->add_option("--problem", run_problem_name, "Problem name (see `list`)")->required();
  run->add_option("--zones", zones, "NX or NXxNY");
  run->add_option("--out", out, "Output CSV (default <problem>_<order>_<mesh>.csv)");
  run->add_option("--t-end", t_end_str, "Override the stop time");
  run->add_flag("--quiet", quiet, "Do not print run metadata");
  run_flags.add(run);

  std::string conv_problem, orders_str = "3,5,7,9", meshes_str = "16,32,64,128", conv_out;
  auto* conv = app.add_subcommand("convergence", "Accuracy study against the exact solution");
  conv->add_option("--config", config_path, "Flat key = value file; flags win");
  conv->add_option("--problem", conv_problem, "Problem with an exact solution")->required();
  conv->add_option("--orders", orders_str, "Comma-separated orders");
  conv->add_option("--meshes", meshes_str, "Comma-separated zone counts per direction");
  conv->add_option("--out", conv_out, "Output CSV; one file per order when several are given");
  conv_flags.add(conv);

  int coeff_order = 9;
  auto* coeffs = app.add_subcommand("derive-coeffs", "Print exact correction coefficients");
  coeffs->add_option("--order", coeff_order, "Scheme order")->check(CLI::IsMember({3, 5, 7, 9}));

  auto* list = app.add_subcommand("list", "List registered problems");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = merge_config(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*coeffs) {
      const CorrectionCoefficients c = derive_correction_coefficients(coeff_order);
      for (int k = 0; k < c.count(); ++k)
        std::cout << "c" << 2 * (k + 1) << " = " << c.c[k].str() << '\n';
      return 0;
    }
    if (*list) {
      for (const auto& p : problem_registry())
        std::cout << p.name << "  " << p.description << '\n';
      return 0;
    }
    if (*run) {
      const ProblemSpec& spec = find_problem(run_problem_name);
      RunConfig c = default_run_config(spec, run_flags.order);
      run_flags.apply(c);
      if (!zones.empty()) parse_zones(zones, c.nx, c.ny);
      if (!t_end_str.empty()) c.t_end = std::stod(t_end_str);
      const auto t0 = std::chrono::steady_clock::now();
      RunResult r = run_problem(spec, c);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const Grid& g = r.state.grid();
      const std::string path =
          out.empty() ? snapshot_name(spec.name, c.scheme.order(), g.nx(), g.ny()) : out;
      const SystemModel sys = spec.make_system();
      write_solution_csv(path, r.state, sys);
      r.metadata.emplace_back("output", path);
      r.metadata.emplace_back("wall_seconds", std::to_string(secs));
      if (spec.exact) {
        const ErrorNorms e = solution_error(r.state, sys, spec.exact, r.t);
        r.metadata.emplace_back("density_l1_error", std::to_string(e.l1));
        r.metadata.emplace_back("density_linf_error", std::to_string(e.linf));
      }
      if (!quiet) write_metadata(std::cout, r.metadata);
      return 0;
    }
    if (*conv) {
      const ProblemSpec& spec = find_problem(conv_problem);
      const std::vector<int> orders = parse_int_list(orders_str, "order");
      const std::vector<int> meshes = parse_int_list(meshes_str, "mesh");
      for (int order : orders) {
        RunConfig c = default_run_config(spec, order);
        accuracy_study_integrator(order, c.integrator);
        conv_flags.apply(c);
        Metadata meta;
        const auto rows = convergence_study(spec, c, meshes, &meta);
        std::cout << "# order " << order << '\n';
        write_metadata(std::cout, meta);
        write_convergence_csv(std::cout, rows);
        if (!conv_out.empty()) {
          const std::string path =
              orders.size() > 1 ? with_suffix(conv_out, "_" + std::to_string(order)) : conv_out;
          write_convergence_csv(path, rows);
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
