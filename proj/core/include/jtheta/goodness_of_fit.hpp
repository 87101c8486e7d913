#pragma once

// Kolmogorov-Smirnov statistics used to validate samplers and simulators.

#include <functional>
#include <span>

namespace jtheta::gof {

/// sup_x |F_n(x) - F(x)| for an ascending-sorted sample.
double ks_one_sample(std::span<const double> sorted, const std::function<double(double)>& cdf);

/// sup_x |F_n(x) - G_m(x)| for two ascending-sorted samples.
double ks_two_sample(std::span<const double> a_sorted, std::span<const double> b_sorted);

/// Asymptotic Kolmogorov survival P(K > t) = 2 sum_{k>=1} (-1)^{k-1} e^{-2 k^2 t^2}.
double kolmogorov_sf(double t);

/// c(alpha) = sqrt(-log(alpha / 2) / 2); one-sample rejection at D > c / sqrt(n).
double kolmogorov_critical(double alpha);

/// Two-sample critical distance c(alpha) sqrt((n + m) / (n m)).
double ks_two_sample_critical(double alpha, std::size_t n, std::size_t m);

}  // namespace jtheta::gof
