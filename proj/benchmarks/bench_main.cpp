#include <benchmark/benchmark.h>

#include "cyclotrig/discover.hpp"
#include "cyclotrig/gauss.hpp"
#include "cyclotrig/verify.hpp"

using namespace cyclotrig;

namespace {

Identity headline() {
  return Identity{{{Rational(1), TrigKind::Tan, 3, 11},
                   {Rational(4), TrigKind::Sin, 2, 11}},
                  0,
                  {Rational(1), 11}};
}

void BM_verify_headline(benchmark::State& state) {
  Identity id = headline();
  for (auto _ : state) benchmark::DoNotOptimize(verify(id).holds);
}
BENCHMARK(BM_verify_headline);

void BM_verify_nineteen(benchmark::State& state) {
  Identity id{{{Rational(1), TrigKind::Tan, 4, 19},
               {Rational(4), TrigKind::Sin, 5, 19},
               {Rational(-4), TrigKind::Sin, 6, 19},
               {Rational(4), TrigKind::Sin, 9, 19}},
              0,
              {Rational(1), 19}};
  for (auto _ : state) benchmark::DoNotOptimize(verify(id).holds);
}
BENCHMARK(BM_verify_nineteen);

void BM_gauss_sum_199(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum(199).is_zero());
}
BENCHMARK(BM_gauss_sum_199);

void BM_gauss_closed_form_199(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_closed_form(199).is_zero());
}
BENCHMARK(BM_gauss_closed_form_199);

void BM_discover_seven(benchmark::State& state) {
  DiscoveryConfig cfg;
  cfg.denominators = {7};
  cfg.coeff_set = {Rational(4), Rational(-4)};
  cfg.max_sin_terms = 1;
  cfg.surd_candidates = {7};
  for (auto _ : state) benchmark::DoNotOptimize(discover(cfg).found.size());
}
BENCHMARK(BM_discover_seven);

void BM_inverse_zeta44(benchmark::State& state) {
  CycloElem u = CycloElem::root_power(44, 3) + CycloElem::one(44);
  for (auto _ : state) benchmark::DoNotOptimize(u.inverse().is_zero());
}
BENCHMARK(BM_inverse_zeta44);

}  // namespace

BENCHMARK_MAIN();
