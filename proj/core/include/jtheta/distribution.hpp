#pragma once

// The Jacobi theta distribution: the law of sum_{x>=1} W_x / x^2 with W_x iid
// exponential of mean m. It is a scale family, X_m = m * X_1, so every
// evaluation reduces to the standard (m = 1) curve at x / m.

#include <complex>

namespace jtheta {

/// The single positive parameter m (common exponential mean).
class ThetaParam {
 public:
  /// Throws DomainError unless m is positive and finite.
  explicit ThetaParam(double m);

  double m() const noexcept { return m_; }

  friend bool operator==(const ThetaParam&, const ThetaParam&) = default;

 private:
  double m_;
};

struct DistributionStats {
  double mean;
  double variance;
  double second_moment;
  double skewness;
  double kurtosis;
  double snr;  // mean / sqrt(variance)
};

/// P(X <= x) = sqrt(m pi / x) theta_2(0, e^{-m pi^2 / x}); 0 for x <= 0.
double cdf(ThetaParam p, double x);

/// P(X > x), accurate in the right tail where 1 - cdf cancels.
double sf(ThetaParam p, double x);

/// Density, the exact x-derivative of cdf.
double pdf(ThetaParam p, double x);

/// Result of a quantile inversion with solver diagnostics.
struct QuantileResult {
  double x;
  int iterations;
  double residual;  // |cdf(x) - u|
};

/// Inverse CDF for 0 < u < 1 with |cdf(x) - u| < 1e-10. Throws DomainError for
/// u outside (0, 1) and ConvergenceError if no bracket exists in
/// [1e-300 m, 1e300 m].
double quantile(ThetaParam p, double u);
QuantileResult quantile_with_diagnostics(ThetaParam p, double u);

/// E exp(-alpha X) = sqrt(alpha m) pi csch(sqrt(alpha m) pi), alpha >= 0.
double laplace_transform(ThetaParam p, double alpha);

/// E exp(t X) for t < 1/m; diverges at t = 1/m because the first atom is
/// Exponential(m). Throws DomainError for t >= 1/m.
double mgf(ThetaParam p, double t);

/// Characteristic function C(omega) = E exp(i omega X).
std::complex<double> characteristic(ThetaParam p, double omega);

/// |C(omega)|^2 = |omega| m pi^2 csch(sqrt(-i omega m) pi) csch(sqrt(i omega m) pi).
double spectrum_magnitude_sq(ThetaParam p, double omega);

/// Principal-value phase arg C(omega) in (-pi, pi].
double spectrum_phase(ThetaParam p, double omega);

DistributionStats stats(ThetaParam p);

/// n! (m zeta(2))^n, an upper bound on E X^n (tight at n = 1). Throws
/// OverflowError when the value is not representable.
double moment_upper_bound(ThetaParam p, int n);

namespace standard {
// The m = 1 curves. cdf(m, x) == standard::cdf(x / m).
double cdf(double y);
double sf(double y);
double pdf(double y);
QuantileResult quantile(double u);
}  // namespace standard

}  // namespace jtheta
