#include "jtheta/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "jtheta/approx.hpp"
#include "jtheta/errors.hpp"
#include "jtheta/specfun.hpp"

namespace jtheta::apps {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

double standard_normal_cdf(double v) { return 0.5 * std::erfc(-v / std::numbers::sqrt2); }

}  // namespace

void GridScenario::validate() const {
  require_positive(d, "d");
  require_positive(lambda, "lambda");
  if (kind == GridKind::sqrt_spacing && extent_t < 1) {
    throw DomainError("extent t must be >= 1 for sqrt spacing");
  }
}

void SinrScenario::validate() const {
  require_positive(z, "z");
  require_positive(m, "m");
  require_positive(d, "d");
  require_positive(lambda, "lambda");
}

ThetaParam interference_param(double d, double lambda) {
  require_positive(d, "d");
  require_positive(lambda, "lambda");
  return ThetaParam(1.0 / (4.0 * kPi * d * d * lambda));
}

Moments altered_grid_moments(const GridScenario& sc) {
  sc.validate();
  if (sc.kind != GridKind::sqrt_spacing) {
    throw DomainError("altered_grid_moments: scenario must use sqrt spacing");
  }
  const double t = static_cast<double>(sc.extent_t);
  const double scale = 4.0 * kPi * sc.lambda * sc.d * sc.d;
  return {specfun::harmonic(sc.extent_t, 1) / t / scale,
          specfun::harmonic(sc.extent_t, 2) / (t * t) / (scale * scale)};
}

std::vector<Point> place_points(Rng& rng, long long count, GridKind kind, double d, long long t) {
  if (count < 1) throw DomainError("place_points: count must be >= 1");
  require_positive(d, "d");
  if (t <= 0) t = count;
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  for (long long k = 1; k <= count; ++k) {
    const double kd = static_cast<double>(k);
    const double r = kind == GridKind::constant_spacing
                         ? kd * d
                         : std::sqrt(static_cast<double>(t) * kd) * d;
    // uniform_open is in (0, 1); the angle lands in (0, 2 pi) strictly.
    const double angle = 2.0 * kPi * rng.uniform_open();
    points.push_back({r * std::cos(angle), r * std::sin(angle)});
  }
  return points;
}

SinrMoments sinr_moments(const SinrScenario& sc) {
  sc.validate();
  const double pi3 = kPi * kPi * kPi;
  const double base = sc.d * sc.d * sc.lambda * sc.m * sc.z;
  const double mean = 21.0 / (10.0 * pi3 * base);
  const double variance = 3969.0 / (500.0 * pi3 * pi3 * base * base);
  return {mean, variance, mean / std::sqrt(variance)};
}

double coverage_probability(const SinrScenario& sc, double t) {
  sc.validate();
  if (!(t > 0.0)) throw DomainError("coverage_probability: threshold t must be positive");
  const approx::LogNormalParams lp = approx::lognormal_match(ThetaParam(sc.m));
  const double rate = 4.0 * kPi * sc.d * sc.d * sc.lambda * sc.z;

  // E exp(-rate t Y), Y = exp(mu + sigma v), v standard normal, over the
  // 1e-9 .. 1 - 1e-9 quantile range; the lower tail contributes ~Phi(a).
  const double a = -5.997807015007686;
  auto integrand = [&](double v) {
    const double y = std::exp(lp.mu + lp.sigma * v);
    return std::exp(-0.5 * v * v - rate * t * y) / std::sqrt(2.0 * kPi);
  };
  double error = 0.0;
  const double body = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, a, -a, 15, 1e-12, &error);
  if (!(error <= 1e-9)) {
    throw ConvergenceError("coverage_probability: quadrature error estimate " +
                           std::to_string(error));
  }
  return std::clamp(body + standard_normal_cdf(a), 0.0, 1.0);
}

double sample_sinr_ratio(Rng& rng, const SinrScenario& sc) {
  sc.validate();
  const approx::LogNormalParams lp = approx::lognormal_match(ThetaParam(sc.m));
  const double power = sample_exponential(rng, 1.0 / (4.0 * kPi * sc.d * sc.d * sc.lambda * sc.z));
  const double interference = std::exp(lp.mu + lp.sigma * rng.normal());
  return power / interference;
}

ThetaParam gravity_trade_param(double lambda, double d) {
  require_positive(lambda, "lambda");
  require_positive(d, "d");
  return ThetaParam(1.0 / (lambda * d * d));
}

double sample_trade_flow(Rng& rng, double lambda) {
  require_positive(lambda, "lambda");
  const double gdp = sample_exponential(rng, 1.0 / lambda) + sample_exponential(rng, 1.0 / lambda);
  return rng.uniform_open() * gdp;
}

double sample_total_trade(Rng& rng, double lambda, double d, int truncation_k) {
  require_positive(d, "d");
  if (truncation_k < 1) throw DomainError("sample_total_trade: K must be >= 1");
  double sum = 0.0;
  for (int x = 1; x <= truncation_k; ++x) {
    const double xd = static_cast<double>(x);
    sum += sample_trade_flow(rng, lambda) / (xd * xd);
  }
  return sum / (d * d);
}

ThetaParam electric_field_param(double lambda, double d, double epsilon0) {
  require_positive(lambda, "lambda");
  require_positive(d, "d");
  require_positive(epsilon0, "epsilon0");
  return ThetaParam(1.0 / (4.0 * kPi * epsilon0 * d * d * lambda));
}

InterferenceField::InterferenceField(const GridScenario& sc, long long count, Rng& placement_rng) {
  sc.validate();
  const bool sqrt_grid = sc.kind == GridKind::sqrt_spacing;
  const long long n = sqrt_grid ? sc.extent_t : count;
  if (n < 1) throw DomainError("InterferenceField: needs at least one interferer");
  power_mean_ = 1.0 / (4.0 * kPi * sc.d * sc.d * sc.lambda);
  const auto points = place_points(placement_rng, n, sc.kind, sc.d, sqrt_grid ? sc.extent_t : 0);
  weights_.reserve(points.size());
  for (const Point& pt : points) {
    weights_.push_back(sc.d * sc.d / (pt.x * pt.x + pt.y * pt.y));
  }
}

double InterferenceField::sample(Rng& rng) const {
  double sum = 0.0;
  for (double w : weights_) sum += -std::log(rng.uniform_open()) * w;
  return power_mean_ * sum;
}

}  // namespace jtheta::apps
