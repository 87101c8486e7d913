#pragma once

// Inverse-square superposition models whose totals are Jacobi theta
// distributed: radio interference fields, the SINR ratio and its coverage,
// the gravity trade model and the electric-field parameterization.
//
// Distances in the inverse-square law are measured in units of the radial
// spacing d; the physical scale enters through the exponential rate
// 4 pi d^2 lambda, which makes m = 1 / (4 pi d^2 lambda).

#include <vector>

#include "jtheta/distribution.hpp"
#include "jtheta/sampling.hpp"

namespace jtheta::apps {

enum class GridKind { constant_spacing, sqrt_spacing };

struct GridScenario {
  double d = 1.0;
  double lambda = 1.0;
  GridKind kind = GridKind::constant_spacing;
  long long extent_t = 1;  // horizon t for sqrt_spacing

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct SinrScenario {
  double z = 1.0;
  double m = 1.0;
  double d = 1.0;
  double lambda = 1.0;

  void validate() const;
};

struct Moments {
  double mean;
  double variance;
};

struct SinrMoments {
  double mean;
  double variance;
  double snr_ratio;  // mean / sqrt(variance) = sqrt(5) / 3
};

struct Point {
  double x;
  double y;
};

/// m = 1 / (4 pi d^2 lambda) for interferers with powers Exponential(rate 4 pi d^2 lambda).
ThetaParam interference_param(double d, double lambda);

/// Mean (H_t / t) / (4 pi lambda d^2) and variance (H_t^(2) / t^2) / (4 pi lambda d^2)^2
/// of the field on the grid {sqrt(t x) : x = 1..t}. Requires kind == sqrt_spacing.
Moments altered_grid_moments(const GridScenario& sc);

/// count points at radii k d (constant_spacing) or sqrt(t k) d (sqrt_spacing,
/// t defaults to count), k = 1..count, at uniform random angles in [0, 2 pi).
std::vector<Point> place_points(Rng& rng, long long count, GridKind kind, double d = 1.0,
                                long long t = 0);

/// Log-normal-surrogate moments of Q_z = P_z / I with P_z ~ Exponential(rate
/// 4 pi d^2 lambda z): E Q = 21 / (10 pi^3 d^2 lambda m z),
/// Var Q = 3969 / (500 pi^6 d^4 lambda^2 m^2 z^2).
SinrMoments sinr_moments(const SinrScenario& sc);

/// P(P_z / I > t) with I replaced by its matched log-normal surrogate,
/// integrated by adaptive Gauss-Kronrod quadrature. Throws ConvergenceError if
/// the quadrature error estimate exceeds 1e-9.
double coverage_probability(const SinrScenario& sc, double t);

/// One draw of P_z / I under the same surrogate model.
double sample_sinr_ratio(Rng& rng, const SinrScenario& sc);

/// m = 1 / (lambda d^2).
ThetaParam gravity_trade_param(double lambda, double d);

/// U * G with U ~ Uniform(0, 1) and G ~ Gamma(shape 2, rate lambda); the
/// product is Exponential(rate lambda).
double sample_trade_flow(Rng& rng, double lambda);

/// sum_{x=1}^{K} U_x G_x / x^2 (distance in units of d) scaled by 1/d^2.
double sample_total_trade(Rng& rng, double lambda, double d, int truncation_k);

/// m = 1 / (4 pi epsilon0 d^2 lambda).
ThetaParam electric_field_param(double lambda, double d, double epsilon0);

/// Aggregate power at the origin from a fixed layout of interferers. Points
/// are placed once; each realization draws fresh exponential powers.
class InterferenceField {
 public:
  /// constant_spacing uses count points; sqrt_spacing uses sc.extent_t points.
  InterferenceField(const GridScenario& sc, long long count, Rng& placement_rng);

  double sample(Rng& rng) const;

  const std::vector<double>& inverse_square_weights() const noexcept { return weights_; }

 private:
  double power_mean_;
  std::vector<double> weights_;  // (d / r)^2 per point
};

}  // namespace jtheta::apps
