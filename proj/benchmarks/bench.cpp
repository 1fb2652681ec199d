#include <benchmark/benchmark.h>

#include "c3k/closed_forms.hpp"
#include "c3k/registry.hpp"
#include "c3k/sequences.hpp"
#include "c3k/series.hpp"
#include "c3k/verifier.hpp"

using namespace c3k;

namespace {

SeriesSpec unit(BigRational z) {
  SeriesSpec s;
  s.z = z;
  return s;
}

void BM_Fib(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fib(state.range(0)));
}
BENCHMARK(BM_Fib)->Arg(100)->Arg(10000)->Arg(1000000);

void BM_PartialSum(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(1)), state.range(0));
  const SeriesSpec s = unit(BigRational(20, 3));
  for (auto _ : state) benchmark::DoNotOptimize(partial_sum(s, state.range(0), ctx));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PartialSum)->Args({1000, 30})->Args({10000, 30})->Args({10000, 100});

void BM_SumToDigits(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const auto ctx = make_context(digits, 1'000'000);
  const SeriesSpec s = unit(BigRational(20, 3));
  for (auto _ : state) benchmark::DoNotOptimize(sum_to_digits(s, digits, ctx));
}
BENCHMARK(BM_SumToDigits)->Arg(20)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BoundaryPositive(benchmark::State& state) {
  const auto ctx = make_context(20, 1'000'000);
  const SeriesSpec s = unit(BigRational(27, 4));
  for (auto _ : state) benchmark::DoNotOptimize(sum_boundary(s, 10, ctx));
}
BENCHMARK(BM_BoundaryPositive)->Unit(benchmark::kMillisecond);

void BM_BoundaryAlternating(benchmark::State& state) {
  const auto ctx = make_context(20, 1'000'000);
  const SeriesSpec s = unit(BigRational(-27, 4));
  for (auto _ : state) benchmark::DoNotOptimize(sum_boundary(s, 10, ctx));
}
BENCHMARK(BM_BoundaryAlternating);

void BM_ExprEval(benchmark::State& state) {
  const auto ctx = make_context(static_cast<int>(state.range(0)), 1);
  const Expr e = Expr::parse("256/3969 + 68120*sqrt(3)/250047*atan(sqrt(3)/7) - 1300/27783*log(25/13)");
  for (auto _ : state) benchmark::DoNotOptimize(eval_expr(e, ctx));
}
BENCHMARK(BM_ExprEval)->Arg(30)->Arg(300);

void BM_VerifyAll(benchmark::State& state) {
  VerifyOptions o;
  o.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(builtin_catalog(), 30, o));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
