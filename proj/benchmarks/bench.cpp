#include <benchmark/benchmark.h>

#include "hstarcat/census.hpp"
#include "hstarcat/hstar.hpp"
#include "hstarcat/structure.hpp"

using namespace hstarcat;

namespace {

DaggerAlgebra z2z2_algebra() {
  return make_rel_group_algebra({cyclic_group(2), cyclic_group(2)});
}

void bm_compose_boolean(benchmark::State& state) {
  const SemiringPtr sr = SemiringDef::boolean();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Scalar> e(n * n);
  for (std::size_t i = 0; i < n * n; ++i) e[i] = Scalar(i % 2);
  const Mor f(sr, Obj{n}, Obj{n}, e);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, f));
}
BENCHMARK(bm_compose_boolean)->Arg(4)->Arg(8)->Arg(16);

void bm_commutant_dim4(benchmark::State& state) {
  const DaggerAlgebra alg = z2z2_algebra();
  for (auto _ : state)
    benchmark::DoNotOptimize(generated_vn(alg, std::size_t{1} << 20));
}
BENCHMARK(bm_commutant_dim4);

void bm_closure(benchmark::State& state) {
  const DaggerAlgebra alg = z2z2_algebra();
  const std::vector<Mor> gens = basis_right_mults(alg);
  for (auto _ : state)
    benchmark::DoNotOptimize(closure(gens, true, std::size_t{1} << 20));
}
BENCHMARK(bm_closure);

void bm_census_dim2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(2));
}
BENCHMARK(bm_census_dim2);

void bm_decompose_z2z2(benchmark::State& state) {
  const DaggerAlgebra alg = z2z2_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(alg));
}
BENCHMARK(bm_decompose_z2z2);

}  // namespace

BENCHMARK_MAIN();
