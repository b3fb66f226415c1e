#include "afdweno/harness.hpp"

#include <benchmark/benchmark.h>

using namespace afdweno;

namespace {

// One right-hand-side evaluation of a problem's initial data at its default
// resolution, reported per zone.
void rhs_of(benchmark::State& state, const char* problem, int order) {
  const ProblemSpec& spec = find_problem(problem);
  const SystemModel sys = spec.make_system();
  RunConfig c = default_run_config(spec, order);
  const Grid g = make_grid(spec, c);
  StateArray u = initial_state(spec, sys, g);
  AfdScheme scheme(sys, c.scheme, g);
  StateArray out(g, sys.n_components());
  for (auto _ : state) {
    scheme.rhs(u, out);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * g.zones());
}

void BM_rhs_euler_sod(benchmark::State& s) { rhs_of(s, "euler-sod", int(s.range(0))); }
void BM_rhs_rhd_blast(benchmark::State& s) { rhs_of(s, "rhd-6", int(s.range(0))); }
void BM_rhs_tenmoment_2d(benchmark::State& s) { rhs_of(s, "tenmoment-sine2d", int(s.range(0))); }

BENCHMARK(BM_rhs_euler_sod)->Arg(3)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_rhs_rhd_blast)->Arg(5)->Arg(9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_rhs_tenmoment_2d)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

}  // namespace
