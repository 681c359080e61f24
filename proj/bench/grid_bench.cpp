// Serial reference vs OpenMP grid kernel on the classical-correlation
// objective (17x17x9x9 angles) and on the complementary-phase grid.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "laqc/correlations.hpp"
#include "laqc/optimize.hpp"

namespace {

using namespace laqc;
constexpr double kPi = std::numbers::pi;

const DensityMatrix& state() {
  static const DensityMatrix rho = density_matrix(XState::make(0.4, 0.3, 0.2, 0.1, 0.1, -0.05));
  return rho;
}

const std::vector<GridAxis> kAngles{{0.0, kPi, 17, false}, {0.0, kPi, 17, false},
                                    {0.0, 2.0 * kPi, 9, true}, {0.0, 2.0 * kPi, 9, true}};
const std::vector<GridAxis> kPhases{{0.0, 2.0 * kPi, 64, true}, {0.0, 2.0 * kPi, 64, true}};

double readout_mi(std::span<const double> x) {
  return mutual_information(classical_state_probs(state(), {x[0], x[1], x[2], x[3]}));
}

double complementary_mi(std::span<const double> x) {
  return -mutual_information(complementary_probs(state(), {}, {x[0], x[1]}));
}

template <class Kernel>
void run(benchmark::State& st, Kernel kernel, const std::vector<GridAxis>& axes, double (*f)(std::span<const double>)) {
  for (auto _ : st) benchmark::DoNotOptimize(kernel(f, axes).value);
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * grid_size(axes)));
}

void BM_angles_serial(benchmark::State& st) { run(st, grid_argmin_serial, kAngles, readout_mi); }
void BM_angles_parallel(benchmark::State& st) { run(st, grid_argmin_parallel, kAngles, readout_mi); }
void BM_phases_serial(benchmark::State& st) { run(st, grid_argmin_serial, kPhases, complementary_mi); }
void BM_phases_parallel(benchmark::State& st) { run(st, grid_argmin_parallel, kPhases, complementary_mi); }

}  // namespace

BENCHMARK(BM_angles_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_angles_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_phases_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_phases_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
