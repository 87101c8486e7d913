#include "jtheta/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>

#include "jtheta/errors.hpp"

namespace jtheta::gof {

double ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw DomainError("ks_one_sample: empty sample");
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double kolmogorov_sf(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 0.2) return 1.0;  // series converges slowly; the value is 1 to double precision
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-17) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_critical(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("kolmogorov_critical: alpha in (0, 1)");
  return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

double ks_two_sample_critical(double alpha, std::size_t n, std::size_t m) {
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return kolmogorov_critical(alpha) * std::sqrt((nd + md) / (nd * md));
}

}  // namespace jtheta::gof
