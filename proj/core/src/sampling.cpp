#include "jtheta/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jtheta/errors.hpp"
#include "jtheta/specfun.hpp"

namespace jtheta {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(make_engine(seed, stream)) {}

double Rng::uniform_open() {
  // Midpoints of a 2^-53 grid: never 0, never 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  return r * std::cos(2.0 * std::numbers::pi * uniform_open());
}

SampleSet::SampleSet(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("SampleSet: needs at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
      throw DomainError("SampleSet: value " + std::to_string(i + 1) +
                        " is not positive and finite");
    }
  }
  std::sort(values_.begin(), values_.end());
}

SampleSet SampleSet::scaled(double c) const {
  std::vector<double> v(values_.begin(), values_.end());
  for (double& x : v) x *= c;
  return SampleSet(std::move(v));
}

double sample_exponential(Rng& rng, double mean) {
  if (!(mean > 0.0)) throw DomainError("sample_exponential: mean must be positive");
  return -mean * std::log(rng.uniform_open());
}

double sample_theta_series(Rng& rng, ThetaParam p, const SeriesSamplerConfig& cfg) {
  if (cfg.truncation_k < 1) throw DomainError("SeriesSamplerConfig: truncation_k must be >= 1");
  // Accumulate the atoms first and scale by m once.
  double sum = 0.0;
  for (int x = 1; x <= cfg.truncation_k; ++x) {
    const double xd = static_cast<double>(x);
    sum += -std::log(rng.uniform_open()) / (xd * xd);
  }
  if (cfg.tail_policy == TailPolicy::mean_compensate) {
    sum += specfun::zeta2_tail(cfg.truncation_k);
  }
  return p.m() * sum;
}

double sample_theta_inverse(Rng& rng, ThetaParam p) { return quantile(p, rng.uniform_open()); }

std::vector<double> sample_theta(Rng& rng, ThetaParam p, std::size_t n, SamplerMethod method,
                                 const SeriesSamplerConfig& cfg) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(method == SamplerMethod::series ? sample_theta_series(rng, p, cfg)
                                                  : sample_theta_inverse(rng, p));
  }
  return out;
}

double empirical_cdf(const SampleSet& s, double x) {
  const auto v = s.values();
  const auto it = std::upper_bound(v.begin(), v.end(), x);
  return static_cast<double>(it - v.begin()) / static_cast<double>(v.size());
}

double empirical_quantile(const SampleSet& s, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("empirical_quantile: u must lie in (0, 1)");
  const auto v = s.values();
  const double n = static_cast<double>(v.size());
  auto rank = static_cast<std::size_t>(std::ceil(u * n));
  rank = std::clamp<std::size_t>(rank, 1, v.size());
  return v[rank - 1];
}

}  // namespace jtheta
