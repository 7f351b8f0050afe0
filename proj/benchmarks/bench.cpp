#include <benchmark/benchmark.h>

#include <cmath>

#include "chebpv/chebpv.hpp"

namespace {

void BM_u_eval_all(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::u_eval_all(n, 0.3141));
  }
}
BENCHMARK(BM_u_eval_all)->Arg(16)->Arg(64)->Arg(256);

void BM_gauss_u_rule(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::gauss_u_rule(m));
  }
}
BENCHMARK(BM_gauss_u_rule)->Arg(64)->Arg(1024)->Arg(1 << 16);

void BM_project(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = [](double x) { return std::exp(x) / x; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::project(f, n, 2 * n + 16));
  }
}
BENCHMARK(BM_project)->Arg(16)->Arg(64)->Arg(256);

void BM_series_eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto series =
      chebpv::project([](double x) { return std::exp(x); }, n, 2 * n + 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::series_eval(series, 0.77));
  }
}
BENCHMARK(BM_series_eval)->Arg(16)->Arg(64)->Arg(256);

void BM_pv_integrate(benchmark::State& state) {
  chebpv::Integrand g{[](double x) { return std::exp(x) / x; }, -1.0, 1.0,
                      0.0, 1.0};
  chebpv::PVConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::pv_integrate(g, cfg));
  }
}
BENCHMARK(BM_pv_integrate)->Arg(16)->Arg(64)->Arg(256);

void BM_adaptive_quad(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::oracle::adaptive_quad(
        [](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12));
  }
}
BENCHMARK(BM_adaptive_quad);

void BM_pv_excision(benchmark::State& state) {
  chebpv::Integrand g{[](double x) { return std::exp(x) / x; }, -1.0, 1.0,
                      0.0, 1.0};
  chebpv::oracle::ExcisionSpec spec;
  spec.quad_tolerance = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::oracle::pv_excision(g, spec));
  }
}
BENCHMARK(BM_pv_excision);

void BM_expr_parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        chebpv::expr::parse("exp(x)/x + sin(x)*cos(x) - 1/(2+x)"));
  }
}
BENCHMARK(BM_expr_parse);

void BM_expr_eval(benchmark::State& state) {
  const auto ast = chebpv::expr::parse("exp(x)/x + sin(x)*cos(x) - 1/(2+x)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(chebpv::expr::eval(*ast, 0.42));
  }
}
BENCHMARK(BM_expr_eval);

}  // namespace

BENCHMARK_MAIN();
