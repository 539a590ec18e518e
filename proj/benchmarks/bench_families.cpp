#include <benchmark/benchmark.h>

#include "qbern/carlitz.hpp"
#include "qbern/degenerate.hpp"
#include "qbern/padic.hpp"
#include "qbern/stirling.hpp"

namespace {

void BM_beta_number(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    qbern::carlitz::BetaCache cache; // fresh cache: measure construction
    benchmark::DoNotOptimize(cache.number(n));
  }
}
BENCHMARK(BM_beta_number)->Arg(6)->Arg(10)->Arg(12);

void BM_beta_poly_closed(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    qbern::carlitz::BetaCache cache;
    benchmark::DoNotOptimize(cache.poly_closed(n));
  }
}
BENCHMARK(BM_beta_poly_closed)->Arg(4)->Arg(8)->Arg(10);

void BM_dbeta(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  qbern::carlitz::beta_poly_closed(n); // warm the shared cache
  for (auto _ : state)
    benchmark::DoNotOptimize(qbern::degenerate::dbeta(n));
}
BENCHMARK(BM_dbeta)->Arg(4)->Arg(6)->Arg(8);

void BM_theorem8_check(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const unsigned m = static_cast<unsigned>(state.range(1));
  qbern::RatFunc lhs = qbern::degenerate::dbeta(n);
  for (auto _ : state) {
    qbern::RatFunc rhs = qbern::degenerate::multiplication_rhs(n, m);
    benchmark::DoNotOptimize(lhs == rhs);
  }
}
BENCHMARK(BM_theorem8_check)->Args({4, 2})->Args({4, 3})->Args({6, 3});

void BM_riemann_theorem1(benchmark::State& state) {
  const unsigned N = static_cast<unsigned>(state.range(0));
  qbern::padic::QConfig cfg;
  qbern::degenerate::dbeta(2); // warm
  for (auto _ : state) {
    auto levels = qbern::padic::check_theorem1(2, cfg, {N});
    benchmark::DoNotOptimize(levels);
  }
}
BENCHMARK(BM_riemann_theorem1)->Arg(4)->Arg(6);

void BM_stirling_rows(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    qbern::StirlingTable table;
    table.ensure(n);
    benchmark::DoNotOptimize(table.s1(n, n / 2));
  }
}
BENCHMARK(BM_stirling_rows)->Arg(20)->Arg(50);

} // namespace

BENCHMARK_MAIN();
