#include "afdweno/weno_boundary.hpp"
#include "afdweno/weno_center.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

using namespace afdweno;

namespace {

// Smooth data with a jump every `period` windows, so both the smooth and the
// non-smooth weight paths are exercised.
std::vector<std::vector<double>> windows(int width, int count) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<std::vector<double>> out(count, std::vector<double>(width));
  for (int k = 0; k < count; ++k)
    for (int j = 0; j < width; ++j)
      out[k][j] = std::sin(0.3 * (k + j)) + (k % 4 == 0 && j > width / 2 ? 1.0 : 0.0) + 1e-3 * d(rng);
  return out;
}

void BM_interp_center(benchmark::State& state) {
  WenoConfig c;
  c.order = int(state.range(0));
  const auto data = windows(2 * center_half_width(c.order) + 1, 256);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(interp_center(c, data[k]));
    k = (k + 1) % data.size();
  }
}
BENCHMARK(BM_interp_center)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

void BM_interp_boundary(benchmark::State& state) {
  WenoConfig c;
  c.order = int(state.range(0));
  const auto [lo, hi] = boundary_window(c.order);
  const auto data = windows(hi - lo + 1, 256);
  std::size_t k = 0;
  for (auto _ : state) {
    const ModalPolynomial p = interp_boundary(c, data[k]);
    benchmark::DoNotOptimize(boundary_derivatives(p, c.order));
    k = (k + 1) % data.size();
  }
}
BENCHMARK(BM_interp_boundary)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

}  // namespace
