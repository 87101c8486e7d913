#pragma once

// Estimators for m and the Monte Carlo study that compares them.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "jtheta/sampling.hpp"

namespace jtheta {

enum class EstimatorMethod { exact_cdf_root, asymptotic_lambert, lognormal_mle };

inline constexpr std::array<EstimatorMethod, 3> kAllEstimators = {
    EstimatorMethod::exact_cdf_root, EstimatorMethod::asymptotic_lambert,
    EstimatorMethod::lognormal_mle};

std::string_view to_string(EstimatorMethod method);

struct EstimateReport {
  EstimatorMethod method;
  double m_hat;
  std::optional<double> u_used;
  int iterations;
  double residual;
};

/// Solves sqrt(m pi / x) theta_2(0, e^{-m pi^2 / x}) = u at x = F_n^{-1}(u).
/// Uses cdf(m, x) = cdf(1, x/m): the standard curve is inverted once per u
/// and m_hat = x / y_u.
EstimateReport estimate_exact_cdf(const SampleSet& s, double u = 0.5);

/// m_n = x_n (-2 W_{-1}(-pi u^2 / 8)) / pi^2 with x_n = F_n^{-1}(u), for
/// 0 < u <= 2 sqrt(2 / (e pi)).
EstimateReport estimate_asymptotic(const SampleSet& s, double u = 0.5);

/// (6 / pi^2) sqrt(7/5) (prod X_i)^{1/n}, evaluated in log space.
EstimateReport estimate_lognormal_mle(const SampleSet& s);

EstimateReport estimate(EstimatorMethod method, const SampleSet& s, double u = 0.5);

struct StudyConfig {
  double true_m = 7.0;
  int n_per_sample = 100;
  int replicates = 10000;
  std::uint64_t seed = 1;
  double u = 0.5;
  int bins = 100;
  SamplerMethod sampler = SamplerMethod::inverse;
  SeriesSamplerConfig series{};
  unsigned threads = 0;  // 0: hardware concurrency
};

struct MethodSummary {
  EstimatorMethod method;
  std::size_t count;     // successful replicates
  std::size_t failures;  // replicates recorded as missing
  double mean;
  double variance;  // unbiased
};

struct StudyResult {
  StudyConfig config;
  /// estimates[method][replicate]; NaN marks a failed replicate.
  std::array<std::vector<double>, 3> estimates;
  std::array<MethodSummary, 3> summaries;
  /// Common histogram range across methods: bins + 1 edges.
  std::vector<double> bin_edges;
  std::array<std::vector<std::size_t>, 3> counts;
};

/// For each replicate j, draws n variates from stream (seed, j) and applies
/// all three estimators. Replicates run in parallel; the result does not
/// depend on the thread count.
StudyResult run_estimator_study(const StudyConfig& cfg);

}  // namespace jtheta
