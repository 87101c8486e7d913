#include "jtheta/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "jtheta/approx.hpp"
#include "jtheta/errors.hpp"
#include "jtheta/specfun.hpp"

namespace jtheta {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

// Below this reduced abscissa the direct theta series is used; above it the
// alternating dual series 1 + 2 sum (-1)^k e^{-k^2 y}.
constexpr double kDualSwitch = kPi;

constexpr double kClampSlack = 1e-12;

double clamp_probability(double v, const char* what) {
  if (v < -kClampSlack || v > 1.0 + kClampSlack) {
    throw ConsistencyError(std::string(what) + " left [0, 1] by more than round-off: " +
                           std::to_string(v));
  }
  return std::clamp(v, 0.0, 1.0);
}

// 2 sum_{k>=1} (-1)^{k+1} k^power e^{-k^2 y}, for y >= kDualSwitch.
double dual_series(double y, int power) {
  double sum = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double kk = static_cast<double>(k) * k;
    const double term = std::exp(-kk * y) * (power == 2 ? kk : 1.0);
    sum += (k % 2 == 1) ? term : -term;
    if (term <= 1e-17 * std::abs(sum) || term == 0.0) break;
  }
  return 2.0 * sum;
}

double lognormal_seed(double u) {
  return approx::lognormal_quantile(approx::lognormal_match(ThetaParam(1.0)), u);
}

}  // namespace

ThetaParam::ThetaParam(double m) : m_(m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("ThetaParam: m must be positive and finite, got " + std::to_string(m));
  }
}

namespace standard {

double cdf(double y) {
  if (std::isnan(y)) return y;
  if (y <= 0.0) return 0.0;
  if (y >= kDualSwitch) return clamp_probability(1.0 - dual_series(y, 0), "cdf");
  const double s = kPi2 / y;
  return clamp_probability(std::sqrt(s / kPi) * specfun::theta2_zero_lognome(s), "cdf");
}

double sf(double y) {
  if (std::isnan(y)) return y;
  if (y <= 0.0) return 1.0;
  if (y >= kDualSwitch) return clamp_probability(dual_series(y, 0), "sf");
  return 1.0 - cdf(y);
}

double pdf(double y) {
  if (std::isnan(y)) return y;
  if (y <= 0.0) return 0.0;
  double v;
  if (y >= kDualSwitch) {
    v = dual_series(y, 2);
  } else {
    const double s = kPi2 / y;
    const double theta = specfun::theta2_zero_lognome(s);
    if (theta == 0.0) return 0.0;
    const double series = specfun::theta2_qderiv_series_lognome(s);
    const double bracket = 2.0 * kPi2 * (theta / 4.0 + 2.0 * std::exp(-s) * series) - y * theta;
    v = std::sqrt(kPi) / (2.0 * y * y * std::sqrt(y)) * bracket;
  }
  if (v < -kClampSlack) {
    throw ConsistencyError("pdf negative beyond round-off: " + std::to_string(v));
  }
  return std::max(v, 0.0);
}

QuantileResult quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile: u must lie in (0, 1), got " + std::to_string(u));
  }
  // Increasing in t = log y. The upper half is solved on the survival
  // function so that 1 - u keeps its relative precision.
  const bool upper = u > 0.5;
  auto g = [u, upper](double t) {
    const double y = std::exp(t);
    return upper ? (1.0 - u) - sf(y) : cdf(y) - u;
  };

  const double lo_limit = std::log(1e-300);
  const double hi_limit = std::log(1e300);
  const double seed = std::log(lognormal_seed(u));

  double step = 0.05;
  double lo = seed - step;
  double hi = seed + step;
  double glo = g(lo);
  double ghi = g(hi);
  int iterations = 2;
  while (glo > 0.0) {
    hi = lo;
    ghi = glo;
    step *= 2.0;
    lo = std::max(lo - step, lo_limit);
    glo = g(lo);
    ++iterations;
    if (glo > 0.0 && lo <= lo_limit) throw ConvergenceError("quantile: no lower bracket");
  }
  while (ghi < 0.0) {
    lo = hi;
    glo = ghi;
    step *= 2.0;
    hi = std::min(hi + step, hi_limit);
    ghi = g(hi);
    ++iterations;
    if (ghi < 0.0 && hi >= hi_limit) throw ConvergenceError("quantile: no upper bracket");
  }

  double root;
  if (glo == 0.0) {
    root = lo;
  } else if (ghi == 0.0) {
    root = hi;
  } else {
    boost::uintmax_t max_iter = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        g, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(50), max_iter);
    iterations += static_cast<int>(max_iter);
    const double a = bracket.first;
    const double b = bracket.second;
    root = std::abs(g(a)) <= std::abs(g(b)) ? a : b;
  }
  const double x = std::exp(root);
  const double residual = std::abs(cdf(x) - u);
  if (!(residual < 1e-10)) {
    throw ConvergenceError("quantile: residual " + std::to_string(residual) + " at u = " +
                           std::to_string(u));
  }
  return {x, iterations, residual};
}

}  // namespace standard

double cdf(ThetaParam p, double x) { return standard::cdf(x / p.m()); }

double sf(ThetaParam p, double x) { return standard::sf(x / p.m()); }

double pdf(ThetaParam p, double x) { return standard::pdf(x / p.m()) / p.m(); }

QuantileResult quantile_with_diagnostics(ThetaParam p, double u) {
  QuantileResult r = standard::quantile(u);
  r.x *= p.m();
  return r;
}

double quantile(ThetaParam p, double u) { return quantile_with_diagnostics(p, u).x; }

double laplace_transform(ThetaParam p, double alpha) {
  if (std::isnan(alpha) || alpha < 0.0) {
    throw DomainError("laplace_transform: alpha must be >= 0");
  }
  const double a = std::sqrt(alpha * p.m()) * kPi;
  if (a < 1e-4) return 1.0 - a * a / 6.0 + 7.0 * a * a * a * a / 360.0;
  if (a > 20.0) {
    const double e = std::exp(-a);
    return 2.0 * a * e / (1.0 - e * e);
  }
  return a / std::sinh(a);
}

double mgf(ThetaParam p, double t) {
  if (std::isnan(t) || t >= 1.0 / p.m()) {
    throw DomainError("mgf: requires t < 1/m (the first atom is Exponential(m))");
  }
  if (t < 0.0) return laplace_transform(p, -t);
  const double b = std::sqrt(t * p.m()) * kPi;
  if (b < 1e-4) return 1.0 + b * b / 6.0 + 7.0 * b * b * b * b / 360.0;
  return b / std::sin(b);
}

std::complex<double> characteristic(ThetaParam p, double omega) {
  if (omega == 0.0) return {1.0, 0.0};
  const std::complex<double> w = std::sqrt(std::complex<double>(0.0, -omega * p.m())) * kPi;
  if (std::abs(w) < 1e-4) return 1.0 - w * w / 6.0;
  return w * specfun::csch_complex(w);
}

double spectrum_magnitude_sq(ThetaParam p, double omega) {
  if (omega == 0.0) return 1.0;
  const double a = omega * p.m();
  const std::complex<double> minus = std::sqrt(std::complex<double>(0.0, -a)) * kPi;
  const std::complex<double> plus = std::sqrt(std::complex<double>(0.0, a)) * kPi;
  if (std::abs(minus) < 1e-4) return std::norm(characteristic(p, omega));
  const std::complex<double> prod =
      specfun::csch_complex(minus) * specfun::csch_complex(plus);
  return std::abs(omega) * p.m() * kPi2 * prod.real();
}

double spectrum_phase(ThetaParam p, double omega) { return std::arg(characteristic(p, omega)); }

DistributionStats stats(ThetaParam p) {
  const double m = p.m();
  DistributionStats s{};
  s.mean = m * specfun::kZeta2;
  s.variance = m * m * specfun::kZeta4;
  s.second_moment = 7.0 * m * m * kPi2 * kPi2 / 180.0;
  s.skewness = 4.0 * std::sqrt(10.0) / 7.0;
  s.kurtosis = 57.0 / 7.0;
  s.snr = std::sqrt(5.0 / 2.0);
  return s;
}

double moment_upper_bound(ThetaParam p, int n) {
  if (n < 1) throw DomainError("moment_upper_bound: n must be >= 1");
  const double mean = p.m() * specfun::kZeta2;
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  const double direct = factorial * std::pow(mean, n);
  if (std::isfinite(factorial) && std::isfinite(direct)) return direct;
  const double log_value = std::lgamma(n + 1.0) + n * std::log(mean);
  if (log_value >= std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("moment_upper_bound: n!(m zeta(2))^n overflows for n = " +
                        std::to_string(n));
  }
  return std::exp(log_value);
}

}  // namespace jtheta
