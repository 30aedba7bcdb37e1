// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "unmix/charset.hpp"
#include "unmix/decomp.hpp"
#include "unmix/elimination.hpp"
#include "unmix/parser_io.hpp"

using namespace unmix;

namespace {

io::SystemFile fixture(const std::string& name) {
  std::ifstream in(std::string(UNMIX_FIXTURE_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_system(buf.str());
}

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_Bareiss(benchmark::State& state) {
  auto t = TriangularSet(fixture("example_2_2_5_tstar.psys").polys);
  auto m = sylvester_matrix(t[2], t[1], 3);
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m, exec_of(state)));
}

void BM_USet(benchmark::State& state) {
  auto t = TriangularSet(fixture("example_4_3_t1.psys").polys);
  for (auto _ : state) benchmark::DoNotOptimize(u_set(t, exec_of(state)));
}

void BM_Charser(benchmark::State& state) {
  auto sys = fixture("example_4_3.psys");
  for (auto _ : state) benchmark::DoNotOptimize(charser_a(sys.polys, {}, exec_of(state)));
}

void BM_Containment(benchmark::State& state) {
  std::vector<GroebnerBasis> bases;
  for (int i = 1; i <= 4; ++i) {
    auto t = TriangularSet(fixture("example_4_3_t" + std::to_string(i) + ".psys").polys);
    bases.push_back(sat_classic(t));
  }
  for (auto _ : state) benchmark::DoNotOptimize(containment_matrix(bases, exec_of(state)));
}

void BM_Decompose(benchmark::State& state) {
  auto sys = fixture("example_4_3.psys");
  for (auto _ : state)
    benchmark::DoNotOptimize(unm_var_dec(sys.polys, SatMethod::improved, {}, exec_of(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the parallel kernel.
BENCHMARK(BM_Bareiss)->Arg(0)->Arg(1);
BENCHMARK(BM_USet)->Arg(0)->Arg(1);
BENCHMARK(BM_Charser)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Containment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
