#include <benchmark/benchmark.h>

#include "jtheta/jtheta.hpp"

namespace {

using jtheta::ThetaParam;

// x / m in {0.3, 1.5, 6}: modular branch, near the switch, dual series.
void BM_Cdf(benchmark::State& state) {
  const ThetaParam p(7.0);
  const double x = 7.0 * static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::cdf(p, x));
}
BENCHMARK(BM_Cdf)->Arg(3)->Arg(15)->Arg(60);

void BM_Pdf(benchmark::State& state) {
  const ThetaParam p(7.0);
  const double x = 7.0 * static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::pdf(p, x));
}
BENCHMARK(BM_Pdf)->Arg(3)->Arg(15)->Arg(60);

void BM_Quantile(benchmark::State& state) {
  const ThetaParam p(7.0);
  const double u = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::quantile(p, u));
}
BENCHMARK(BM_Quantile)->Arg(1)->Arg(500)->Arg(999);

void BM_LambertWm1(benchmark::State& state) {
  double y = -0.3;
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::specfun::lambert_w_m1(y));
}
BENCHMARK(BM_LambertWm1);

void BM_SampleInverse(benchmark::State& state) {
  const ThetaParam p(7.0);
  jtheta::Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::sample_theta_inverse(rng, p));
}
BENCHMARK(BM_SampleInverse);

void BM_SampleSeries(benchmark::State& state) {
  const ThetaParam p(7.0);
  jtheta::Rng rng(1);
  jtheta::SeriesSamplerConfig cfg;
  cfg.truncation_k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::sample_theta_series(rng, p, cfg));
}
BENCHMARK(BM_SampleSeries)->Arg(100)->Arg(10000);

void BM_Estimator(benchmark::State& state) {
  const auto method = jtheta::kAllEstimators[static_cast<std::size_t>(state.range(0))];
  jtheta::Rng rng(2);
  const jtheta::SampleSet s(jtheta::sample_theta(rng, ThetaParam(7.0), 100, jtheta::SamplerMethod::inverse));
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::estimate(method, s, 0.5).m_hat);
  state.SetLabel(std::string(jtheta::to_string(method)));
}
BENCHMARK(BM_Estimator)->DenseRange(0, 2);

void BM_Coverage(benchmark::State& state) {
  const jtheta::apps::SinrScenario sc{1.0, 7.0, 1.0, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(jtheta::apps::coverage_probability(sc, 0.1));
}
BENCHMARK(BM_Coverage);

}  // namespace

BENCHMARK_MAIN();
