#include "jtheta/approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/erf.hpp>

#include "jtheta/errors.hpp"
#include "jtheta/specfun.hpp"

namespace jtheta::approx {
namespace {

constexpr double kPi = std::numbers::pi;

void check_asymptotic_domain(ThetaParam p, double x, const char* what) {
  if (!(x > 0.0) || x > asymptotic_upper(p)) {
    throw DomainError(std::string(what) + ": x must lie in (0, m pi^2 / 2], got " +
                      std::to_string(x));
  }
}

}  // namespace

double asymptotic_upper(ThetaParam p) { return p.m() * kPi * kPi / 2.0; }

double asymptotic_total_mass() { return 2.0 * std::sqrt(2.0 / (std::numbers::e * kPi)); }

double asymptotic_cdf(ThetaParam p, double x) {
  check_asymptotic_domain(p, x, "asymptotic_cdf");
  const double m = p.m();
  return 2.0 * std::sqrt(m * kPi / x) * std::exp(-m * kPi * kPi / (4.0 * x));
}

double asymptotic_pdf(ThetaParam p, double x) {
  check_asymptotic_domain(p, x, "asymptotic_pdf");
  const double m = p.m();
  return std::sqrt(kPi) * std::exp(-kPi * kPi * m / (4.0 * x)) * (kPi * kPi * m - 2.0 * x) *
         std::sqrt(m / x) / (2.0 * x * x);
}

LogNormalParams lognormal_match(ThetaParam p) {
  return {std::log(kPi * kPi * std::sqrt(5.0 / 7.0) * p.m() / 6.0),
          std::sqrt(std::log(7.0 / 5.0))};
}

double lognormal_cdf(LogNormalParams lp, double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0) return 0.0;
  return 0.5 * (1.0 + specfun::erf((std::log(x) - lp.mu) / (lp.sigma * std::numbers::sqrt2)));
}

double lognormal_pdf(LogNormalParams lp, double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0) return 0.0;
  const double z = (std::log(x) - lp.mu) / lp.sigma;
  return std::exp(-0.5 * z * z) / (x * lp.sigma * std::sqrt(2.0 * kPi));
}

double lognormal_quantile(LogNormalParams lp, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("lognormal_quantile: u must lie in (0, 1)");
  }
  const double z =
      u < 0.5 ? -boost::math::erfc_inv(2.0 * u) : boost::math::erfc_inv(2.0 * (1.0 - u));
  return std::exp(lp.mu + lp.sigma * std::numbers::sqrt2 * z);
}

ShapeConstants lognormal_shape_constants() {
  return {17.0 * std::sqrt(2.0 / 5.0) / 5.0, 7631.0 / 625.0};
}

double entropy_approx(ThetaParam p) {
  const LogNormalParams lp = lognormal_match(p);
  // log2(sigma sqrt(2 pi) e^{mu + 1/2}) expanded to avoid overflow for huge m.
  return (std::log(lp.sigma * std::sqrt(2.0 * kPi)) + lp.mu + 0.5) / std::numbers::ln2;
}

}  // namespace jtheta::approx
