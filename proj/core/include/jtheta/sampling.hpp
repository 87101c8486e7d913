#pragma once

// Random-variate generation. Samplers take an Rng by reference; an Rng is a
// single-threaded handle, and parallel work uses one stream per worker or per
// replicate.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "jtheta/distribution.hpp"

namespace jtheta {

/// Seedable 64-bit generator. Streams derived from the same seed with
/// different stream ids are independent. The algorithm (mt19937_64 seeded via
/// seed_seq) is pinned so outputs are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform_open();

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

enum class TailPolicy { drop, mean_compensate };

struct SeriesSamplerConfig {
  int truncation_k = 10000;
  TailPolicy tail_policy = TailPolicy::mean_compensate;
};

/// Positive finite observations, kept sorted ascending.
class SampleSet {
 public:
  /// Throws DomainError if empty or if any value is not positive and finite.
  explicit SampleSet(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

  /// A copy with every value multiplied by c > 0.
  SampleSet scaled(double c) const;

 private:
  std::vector<double> values_;
};

/// -mean log U, U uniform on (0, 1).
double sample_exponential(Rng& rng, double mean);

/// sum_{x=1}^{K} W_x / x^2 with W_x ~ Exponential(mean m). With
/// mean_compensate, the expected tail m (zeta(2) - H_K^(2)) is added.
double sample_theta_series(Rng& rng, ThetaParam p, const SeriesSamplerConfig& cfg = {});

/// quantile(p, U): exact up to the quantile tolerance.
double sample_theta_inverse(Rng& rng, ThetaParam p);

enum class SamplerMethod { series, inverse };

/// n draws with the chosen method.
std::vector<double> sample_theta(Rng& rng, ThetaParam p, std::size_t n,
                                 SamplerMethod method = SamplerMethod::series,
                                 const SeriesSamplerConfig& cfg = {});

/// #{X_i <= x} / n.
double empirical_cdf(const SampleSet& s, double x);

/// Order statistic X_(ceil(u n)), the left-continuous generalized inverse.
double empirical_quantile(const SampleSet& s, double u);

}  // namespace jtheta
