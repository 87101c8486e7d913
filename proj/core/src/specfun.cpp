#include "jtheta/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jtheta/errors.hpp"

namespace jtheta::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Above this log-nome the direct series is used; below it the modular form.
constexpr double kModularSwitch = kPi;

void check_tolerance(const SeriesTolerance& tol) {
  if (!(tol.abs_tol >= 0.0) || tol.max_terms < 1) {
    throw DomainError("SeriesTolerance requires abs_tol >= 0 and max_terms >= 1");
  }
}

// 1 + 2 sum_{k>=1} (-1)^k e^{-pi^2 k^2 / s}, and its s-derivative.
struct ModularSums {
  double value = 1.0;
  double dvalue_ds = 0.0;
};

ModularSums modular_sums(double s, const SeriesTolerance& tol) {
  ModularSums out;
  const double a = kPi * kPi / s;
  for (int k = 1; k <= tol.max_terms; ++k) {
    const double kk = static_cast<double>(k) * k;
    const double term = std::exp(-a * kk);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out.value += 2.0 * sign * term;
    out.dvalue_ds += 2.0 * sign * (a * kk / s) * term;
    if (term <= tol.abs_tol) break;
  }
  return out;
}

}  // namespace

double theta2_zero_lognome(double s, SeriesTolerance tol) {
  check_tolerance(tol);
  if (std::isnan(s) || s <= 0.0) {
    throw DomainError("theta2_zero_lognome: log-nome must be positive, got " + std::to_string(s));
  }
  if (std::isinf(s)) return 0.0;

  if (s < kModularSwitch) {
    return std::sqrt(kPi / s) * modular_sums(s, tol).value;
  }

  // 2 sum_{k>=0} e^{-s (k + 1/2)^2}; terms decay super-geometrically, so the
  // cutoff is taken relative to the running sum.
  double sum = 0.0;
  for (int k = 0; k < tol.max_terms; ++k) {
    const double h = k + 0.5;
    const double term = std::exp(-s * h * h);
    sum += term;
    if (term <= tol.abs_tol * sum || term == 0.0) break;
  }
  return 2.0 * sum;
}

double theta2_zero(double q, SeriesTolerance tol) {
  if (std::isnan(q) || q < 0.0 || q >= 1.0) {
    throw DomainError("theta2_zero: nome must lie in [0, 1), got " + std::to_string(q));
  }
  if (q == 0.0) return 0.0;
  return theta2_zero_lognome(-std::log(q), tol);
}

double theta2_qderiv_series_lognome(double s, SeriesTolerance tol) {
  check_tolerance(tol);
  if (std::isnan(s) || s <= 0.0) {
    throw DomainError("theta2_qderiv_series_lognome: log-nome must be positive");
  }
  if (std::isinf(s)) return 0.0;

  if (s < kModularSwitch) {
    // theta(s) = sqrt(pi/s) T(s); S = (-theta'(s) - theta/4) / (2 e^{-s}).
    const ModularSums t = modular_sums(s, tol);
    const double root = std::sqrt(kPi / s);
    const double theta = root * t.value;
    const double dtheta_ds = -0.5 * root / s * t.value + root * t.dvalue_ds;
    return (-dtheta_ds - 0.25 * theta) * std::exp(s) / 2.0;
  }

  double sum = 0.0;
  for (int k = 1; k <= tol.max_terms; ++k) {
    const double kk1 = static_cast<double>(k) * (k + 1);
    const double term = kk1 * std::exp(-s * (kk1 - 0.75));
    sum += term;
    if (term <= tol.abs_tol * sum || term == 0.0) break;
  }
  return sum;
}

double theta2_qderiv_series(double q, SeriesTolerance tol) {
  if (std::isnan(q) || q <= 0.0 || q >= 1.0) {
    throw DomainError("theta2_qderiv_series: nome must lie in (0, 1), got " + std::to_string(q));
  }
  return theta2_qderiv_series_lognome(-std::log(q), tol);
}

double lambert_w_m1(double y) {
  const double branch = -std::exp(-1.0);
  if (std::isnan(y) || y >= 0.0) {
    throw DomainError("lambert_w_m1: argument must lie in [-1/e, 0)");
  }
  const double p2 = 2.0 * (1.0 + std::exp(1.0) * y);
  if (p2 < -8.0 * kEps) {
    throw DomainError("lambert_w_m1: argument below the branch point -1/e");
  }
  if (p2 <= 0.0) return -1.0;

  double w;
  if (y > branch + 0.01) {
    const double l1 = std::log(-y);
    w = l1 - std::log(-l1);
  } else {
    // Puiseux expansion about the branch point, p = sqrt(2 (1 + e y)).
    const double p = std::sqrt(p2);
    w = -1.0 - p * (1.0 + p * (1.0 / 3.0 + p * (11.0 / 72.0 + p * (43.0 / 540.0 + p * (769.0 / 17280.0)))));
  }

  auto residual = [y](double v) { return v * std::exp(v) - y; };
  double f = residual(w);
  for (int iter = 0; iter < 64 && f != 0.0; ++iter) {
    const double ew = std::exp(w);
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double next = std::min(w - f / denom, -1.0);
    const double fnext = residual(next);
    if (std::abs(fnext) >= std::abs(f)) break;
    const double step = next - w;
    w = next;
    f = fnext;
    if (std::abs(step) <= 4.0 * kEps * std::abs(w)) break;
  }
  return w;
}

std::complex<double> csch_complex(std::complex<double> z) {
  const double re = z.real();
  const double im = z.imag();
  if (re == 0.0) {
    const double r = std::remainder(im, kPi);
    if (std::abs(r) <= 4.0 * kEps * std::max(1.0, std::abs(im))) {
      throw DomainError("csch_complex: pole at i*k*pi");
    }
  }
  if (re > 20.0) {
    const std::complex<double> e = std::exp(-z);
    return 2.0 * e / (1.0 - e * e);
  }
  if (re < -20.0) {
    const std::complex<double> e = std::exp(z);
    return -2.0 * e / (1.0 - e * e);
  }
  return 1.0 / std::sinh(z);
}

double harmonic(long long t, int order) {
  if (t < 1) throw DomainError("harmonic: t must be >= 1");
  if (order != 1 && order != 2 && order != 4) {
    throw DomainError("harmonic: order must be 1, 2 or 4");
  }
  // Smallest terms first.
  double sum = 0.0;
  for (long long x = t; x >= 1; --x) {
    const double xd = static_cast<double>(x);
    double p = xd;
    if (order == 2) p = xd * xd;
    if (order == 4) p = xd * xd * xd * xd;
    sum += 1.0 / p;
  }
  return sum;
}

double zeta2_tail(long long k) {
  if (k < 0) throw DomainError("zeta2_tail: K must be >= 0");
  if (k == 0) return kZeta2;
  if (k < 50) return kZeta2 - harmonic(k, 2);
  const double n = static_cast<double>(k);
  const double n2 = n * n;
  return 1.0 / n - 1.0 / (2.0 * n2) + 1.0 / (6.0 * n2 * n) - 1.0 / (30.0 * n2 * n2 * n) +
         1.0 / (42.0 * n2 * n2 * n2 * n);
}

double erf(double x) { return std::erf(x); }

}  // namespace jtheta::specfun
