#include <benchmark/benchmark.h>

#include <random>

#include "linquo/coxeter.hpp"
#include "linquo/oracle.hpp"
#include "linquo/quotients.hpp"
#include "linquo/simplicial.hpp"

using namespace linquo;

namespace {

MonomialIdeal random_equigenerated(int n, int d, int gens, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto stratum = monomials_of_degree(n, d);
  std::shuffle(stratum.begin(), stratum.end(), rng);
  std::size_t keep = std::min<std::size_t>(stratum.size(), static_cast<std::size_t>(gens));
  stratum.erase(stratum.begin() + static_cast<long>(keep), stratum.end());
  return MonomialIdeal::from_generators(n, stratum);
}

void bm_find_order(benchmark::State& state) {
  auto ideal = random_equigenerated(4, 3, static_cast<int>(state.range(0)), 99);
  for (auto _ : state) benchmark::DoNotOptimize(find_order(ideal));
}
BENCHMARK(bm_find_order)->Arg(6)->Arg(8)->Arg(10);

void bm_oracle_betti(benchmark::State& state) {
  auto ideal = random_equigenerated(4, 3, static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_betti(ideal, FieldSpec::prime(32003)));
}
BENCHMARK(bm_oracle_betti)->Arg(6)->Arg(10)->Arg(14);

void bm_subword_enumeration(benchmark::State& state) {
  CoxeterWord word{4, {1, 2, 1, 3, 1, 2, 3, 1, 2, 1}};
  auto pi = Permutation::from_cycles(4, "(1 2 4)");
  for (auto _ : state) benchmark::DoNotOptimize(subword_complex(word, pi));
}
BENCHMARK(bm_subword_enumeration);

void bm_reisner_cm(benchmark::State& state) {
  auto rp2 = SimplicialComplex::from_facets(
      6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
          {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
  for (auto _ : state)
    benchmark::DoNotOptimize(complex_is_cm(rp2, FieldSpec::rationals()));
}
BENCHMARK(bm_reisner_cm);

} // namespace

BENCHMARK_MAIN();
