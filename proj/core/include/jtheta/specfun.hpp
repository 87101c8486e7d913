#pragma once

// Scalar special-function kernels: the Jacobi theta series at z = 0, its
// nome-derivative series, the lower real branch of Lambert W, complex csch,
// harmonic numbers and the zeta constants.

#include <complex>
#include <numbers>

namespace jtheta::specfun {

/// Truncation policy for the theta series. A series stops once the magnitude
/// of the last added term falls below abs_tol or after max_terms terms.
struct SeriesTolerance {
  double abs_tol = 1e-15;
  int max_terms = 64;
};

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
inline constexpr double kZeta4 =
    std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi / 90.0;

/// theta_2(0, q) = 2 q^{1/4} sum_{k>=0} q^{k(k+1)} for 0 <= q < 1.
///
/// For q > e^{-pi} the modular (Jacobi imaginary) transformation
///   theta_2(0, e^{-s}) = sqrt(pi/s) * (1 + 2 sum_{k>=1} (-1)^k e^{-pi^2 k^2 / s})
/// is used instead; it converges in a handful of terms as q -> 1.
/// Throws DomainError outside [0, 1).
double theta2_zero(double q, SeriesTolerance tol = {});

/// theta_2(0, e^{-s}) for s > 0, parameterized by the log-nome so that very
/// small nomes do not underflow before the q^{1/4} factor is applied.
double theta2_zero_lognome(double s, SeriesTolerance tol = {});

/// sum_{k>=1} k(k+1) q^{k(k+1) - 3/4} for 0 < q < 1. This is the series
/// appearing in the density; it satisfies
///   q theta_2'(q) = theta_2(q) / 4 + 2 q S(q).
double theta2_qderiv_series(double q, SeriesTolerance tol = {});

/// Same series as theta2_qderiv_series with q = e^{-s}, s > 0.
double theta2_qderiv_series_lognome(double s, SeriesTolerance tol = {});

/// Lower real branch W_{-1}(y) for -1/e <= y < 0, so w <= -1 and w e^w = y.
/// Halley iteration seeded by the branch-point expansion near -1/e and by the
/// log-log asymptotic elsewhere. Throws DomainError outside the branch.
double lambert_w_m1(double y);

/// 1 / sinh(z). Throws DomainError at the poles z = i k pi.
std::complex<double> csch_complex(std::complex<double> z);

/// Generalized harmonic number sum_{x=1}^{t} 1/x^order, order in {1, 2, 4}.
double harmonic(long long t, int order = 1);

/// Tail sum_{x>K} 1/x^2 = zeta(2) - H_K^(2), K >= 0, without cancellation
/// for large K (Euler-Maclaurin beyond K = 50).
double zeta2_tail(long long k);

/// Error function (delegates to the C++ standard library).
double erf(double x);

}  // namespace jtheta::specfun
