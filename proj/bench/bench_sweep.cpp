// Serial reference vs OpenMP sweep over the P1xP1 twist family.

#include <benchmark/benchmark.h>

#include "gwall/io.hpp"
#include "gwall/sweep.hpp"

namespace {

using namespace gwall;

const SurfaceData& surface() {
  static const SurfaceData S = load_surface_file(std::string(GWALL_FIXTURE_DIR) + "/p1xp1.json");
  return S;
}

const TableOracle& table() {
  static const TableOracle oracle(
      load_delta_table_file(std::string(GWALL_FIXTURE_DIR) + "/p1xp1_rudakov.csv", surface()));
  return oracle;
}

std::vector<Rational> grid(long points) {
  std::vector<Rational> t;
  for (long k = 0; k < points; ++k) {
    Rational x(4 * k - 2 * points, points);
    x.canonicalize();
    t.push_back(x);
  }
  return t;
}

const ChernCharacter v{2, {Rational(1), Rational(0)}, Rational(-30)};
const TwistDivisor unit{{Rational(1), Rational(-1)}};

void BM_SweepSerial(benchmark::State& state) {
  const auto t = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_twist_serial(v, unit, t, surface(), table()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto t = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_twist(v, unit, t, surface(), table()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_SweepSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
