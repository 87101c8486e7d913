#include "jtheta/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "jtheta/approx.hpp"
#include "jtheta/errors.hpp"
#include "jtheta/specfun.hpp"

namespace jtheta {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

const QuantileResult& standard_quantile_cached(double u) {
  thread_local double cached_u = std::numeric_limits<double>::quiet_NaN();
  thread_local QuantileResult cached{};
  if (u != cached_u) {
    cached = standard::quantile(u);
    cached_u = u;
  }
  return cached;
}

std::size_t index_of(EstimatorMethod m) { return static_cast<std::size_t>(m); }

}  // namespace

std::string_view to_string(EstimatorMethod method) {
  switch (method) {
    case EstimatorMethod::exact_cdf_root:
      return "exact_cdf_root";
    case EstimatorMethod::asymptotic_lambert:
      return "asymptotic_lambert";
    case EstimatorMethod::lognormal_mle:
      return "lognormal_mle";
  }
  return "unknown";
}

EstimateReport estimate_exact_cdf(const SampleSet& s, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("estimate_exact_cdf: u must lie in (0, 1)");
  const double x = empirical_quantile(s, u);
  const QuantileResult& yu = standard_quantile_cached(u);
  const double m_hat = x / yu.x;
  const double residual = std::abs(cdf(ThetaParam(m_hat), x) - u);
  return {EstimatorMethod::exact_cdf_root, m_hat, u, yu.iterations, residual};
}

EstimateReport estimate_asymptotic(const SampleSet& s, double u) {
  const double mass = approx::asymptotic_total_mass();
  if (!(u > 0.0) || u > mass * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
    throw DomainError("estimate_asymptotic: u must lie in (0, 2 sqrt(2/(e pi))] ~ (0, 0.968]");
  }
  const double x = empirical_quantile(s, u);
  const double w = specfun::lambert_w_m1(-std::numbers::pi * u * u / 8.0);
  const double m_hat = x * (-2.0 * w) / kPi2;
  const ThetaParam fitted(m_hat);
  const double at = std::min(x, approx::asymptotic_upper(fitted));
  const double residual = std::abs(approx::asymptotic_cdf(fitted, at) - u);
  return {EstimatorMethod::asymptotic_lambert, m_hat, u, 0, residual};
}

EstimateReport estimate_lognormal_mle(const SampleSet& s) {
  // Centre on the middle order statistic so large samples of large values
  // do not accumulate rounding in the log sum.
  const double centre = std::log(s.values()[s.size() / 2]);
  double dev_sum = 0.0;
  for (double v : s.values()) dev_sum += std::log(v) - centre;
  const double mu_hat = centre + dev_sum / static_cast<double>(s.size());
  const double m_hat = 6.0 / kPi2 * std::sqrt(7.0 / 5.0) * std::exp(mu_hat);
  return {EstimatorMethod::lognormal_mle, m_hat, std::nullopt, 0, 0.0};
}

EstimateReport estimate(EstimatorMethod method, const SampleSet& s, double u) {
  switch (method) {
    case EstimatorMethod::exact_cdf_root:
      return estimate_exact_cdf(s, u);
    case EstimatorMethod::asymptotic_lambert:
      return estimate_asymptotic(s, u);
    case EstimatorMethod::lognormal_mle:
      return estimate_lognormal_mle(s);
  }
  throw DomainError("estimate: unknown method");
}

StudyResult run_estimator_study(const StudyConfig& cfg) {
  if (!(cfg.true_m > 0.0) || cfg.n_per_sample < 1 || cfg.replicates < 1 || cfg.bins < 1 ||
      !(cfg.u > 0.0 && cfg.u < 1.0)) {
    throw DomainError("StudyConfig: m, n, replicates and bins must be positive; u in (0, 1)");
  }
  const ThetaParam p(cfg.true_m);
  const auto reps = static_cast<std::size_t>(cfg.replicates);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  StudyResult result;
  result.config = cfg;
  for (auto& v : result.estimates) v.assign(reps, nan);

  auto run_replicate = [&](std::size_t j) {
    Rng rng(cfg.seed, j);
    const auto draws = sample_theta(rng, p, static_cast<std::size_t>(cfg.n_per_sample),
                                    cfg.sampler, cfg.series);
    const SampleSet sample(draws);
    for (EstimatorMethod method : kAllEstimators) {
      try {
        result.estimates[index_of(method)][j] = estimate(method, sample, cfg.u).m_hat;
      } catch (const std::exception&) {
        // Recorded as missing.
      }
    }
  };

  unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(reps, 256)));
  if (workers == 1) {
    for (std::size_t j = 0; j < reps; ++j) run_replicate(j);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t j = w; j < reps; j += workers) run_replicate(j);
      });
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (EstimatorMethod method : kAllEstimators) {
    const auto& est = result.estimates[index_of(method)];
    MethodSummary s{method, 0, 0, nan, nan};
    double sum = 0.0;
    for (double v : est) {
      if (std::isfinite(v)) {
        ++s.count;
        sum += v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    s.failures = est.size() - s.count;
    if (s.count > 0) s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
      double ss = 0.0;
      for (double v : est) {
        if (std::isfinite(v)) ss += (v - s.mean) * (v - s.mean);
      }
      s.variance = ss / static_cast<double>(s.count - 1);
    }
    result.summaries[index_of(method)] = s;
  }

  const auto bins = static_cast<std::size_t>(cfg.bins);
  if (!(lo < hi)) {
    // Degenerate range (single replicate or all failures): widen around lo.
    const double centre = std::isfinite(lo) ? lo : cfg.true_m;
    lo = centre * 0.5;
    hi = centre * 1.5;
  }
  result.bin_edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) {
    result.bin_edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
  }
  for (EstimatorMethod method : kAllEstimators) {
    auto& counts = result.counts[index_of(method)];
    counts.assign(bins, 0);
    for (double v : result.estimates[index_of(method)]) {
      if (!std::isfinite(v)) continue;
      auto b = static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(bins));
      counts[std::min(b, bins - 1)] += 1;
    }
  }
  return result;
}

}  // namespace jtheta
