#include <benchmark/benchmark.h>

#include "fugue/generators.hpp"
#include "fugue/guitart.hpp"
#include "fugue/kan.hpp"
#include "fugue/rel.hpp"

namespace {

using namespace fugue;

void BM_DiamondComposeAndRun(benchmark::State& state) {
  Rng rng(7);
  auto [m2, m1] = random_composable_pair(rng, 4);
  std::vector<int> word(16, 0);
  for (auto& l : word) l = rng.uniform(m1.input().size());
  for (auto _ : state) {
    MealyMachine comp = compose_diamond(m2, m1);
    benchmark::DoNotOptimize(run_mealy(comp, 0, word));
  }
}
BENCHMARK(BM_DiamondComposeAndRun);

void BM_BoundedFugalityCheck(benchmark::State& state) {
  Rng rng(11);
  MealyMachine m = random_mealy(rng, 4, 3, 3);
  MonoidMealyMachine ext = fugal_extension(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_fugal(ext, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BoundedFugalityCheck)->Arg(4)->Arg(6);

void BM_RelReachability(benchmark::State& state) {
  Rng rng(13);
  FinSet a = numbered_set("A", "a", static_cast<int>(state.range(0)));
  FinSet b = numbered_set("B", "b", 4);
  Rel i = random_rel(rng, a, a);
  Rel o = random_rel(rng, a, b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ran_reachability(i, o, RelMode::Moore));
  }
}
BENCHMARK(BM_RelReachability)->Arg(8)->Arg(16);

void BM_RanOnGroup(benchmark::State& state) {
  FinCat c = monoid_as_category(multiplicative_z2());
  CatFunctor idc = CatFunctor::identity(c);
  FinSet carrier = numbered_set("X", "x", 3);
  std::vector<FinSet> onObj{carrier};
  std::vector<FinFn> onMor{FinFn::identity(carrier), FinFn(carrier, carrier, {1, 0, 2})};
  SetFunctor o("inv", c, onObj, onMor);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ran_along(idc, o));
  }
}
BENCHMARK(BM_RanOnGroup);

} // namespace

BENCHMARK_MAIN();
