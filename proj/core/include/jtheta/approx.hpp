#pragma once

// Approximations to the Jacobi theta law: the first-order asymptotic CDF on
// (0, m pi^2 / 2] and the log-normal surrogate matched in mean and variance.

#include "jtheta/distribution.hpp"

namespace jtheta::approx {

struct LogNormalParams {
  double mu;
  double sigma;
};

struct ShapeConstants {
  double skewness;
  double kurtosis;
};

/// Upper end m pi^2 / 2 of the asymptotic approximation's domain.
double asymptotic_upper(ThetaParam p);

/// 2 sqrt(2 / (e pi)), the mass the asymptotic CDF assigns to its domain.
double asymptotic_total_mass();

/// 2 sqrt(m pi / x) exp(-m pi^2 / (4x)) for 0 < x <= m pi^2 / 2. This is a
/// sub-probability approximation and is not renormalized. Throws DomainError
/// outside the domain.
double asymptotic_cdf(ThetaParam p, double x);

/// d/dx of asymptotic_cdf; vanishes at the upper end of the domain.
double asymptotic_pdf(ThetaParam p, double x);

/// mu = log(pi^2 m sqrt(5/7) / 6), sigma = sqrt(log(7/5)).
LogNormalParams lognormal_match(ThetaParam p);

double lognormal_cdf(LogNormalParams lp, double x);
double lognormal_pdf(LogNormalParams lp, double x);

/// exp(mu + sigma sqrt(2) erf^{-1}(2u - 1)), 0 < u < 1.
double lognormal_quantile(LogNormalParams lp, double u);

/// Skewness 17 sqrt(2/5) / 5 and kurtosis 7631 / 625 of the matched log-normal.
/// These differ from the exact law's (1.81, 8.14): only two moments are matched.
ShapeConstants lognormal_shape_constants();

/// Entropy estimate log2(sigma sqrt(2 pi) e^{mu + 1/2}) in bits.
double entropy_approx(ThetaParam p);

}  // namespace jtheta::approx
