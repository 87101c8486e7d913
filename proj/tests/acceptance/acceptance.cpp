// Acceptance checks. Run with a criterion number (1-11) or no argument for all.
// Each check prints one [PASS]/[FAIL] line; the exit status is nonzero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jtheta/jtheta.hpp"
#include "oracles.hpp"

namespace {

using jtheta::ThetaParam;
using jtheta::testing::kPi;
namespace t = jtheta::testing;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("[%s] C%d %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double a, double b) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void criterion1() {
  constexpr double kTol = 1e-14;
  double worst = 0.0;
  for (double m : {0.1, 1.0, 7.0, 1234.5}) {
    const auto s = jtheta::stats(ThetaParam(m));
    const double pi2 = kPi * kPi;
    const double pi4 = pi2 * pi2;
    worst = std::max({worst, rel(s.mean, m * pi2 / 6.0), rel(s.variance, m * m * pi4 / 90.0),
                      rel(s.second_moment, 7.0 * m * m * pi4 / 180.0),
                      rel(s.skewness, 4.0 * std::sqrt(10.0) / 7.0), rel(s.kurtosis, 57.0 / 7.0),
                      rel(s.snr, std::sqrt(2.5))});
  }
  report(1, worst <= kTol, fmt("closed-form statistics, max rel err %.3g (tol %.0e)", worst, kTol));
}

void criterion2() {
  constexpr double kTol = 1e-6;
  double worst = 0.0;
  for (double m : {1.0, 7.0}) {
    const ThetaParam p(m);
    for (double x : t::log_space(jtheta::quantile(p, 0.001), jtheta::quantile(p, 0.999), 50)) {
      worst = std::max(worst, std::abs(jtheta::cdf(p, x) - t::talbot_theta_cdf(m, x)));
    }
  }
  report(2, worst <= kTol, fmt("cdf vs Talbot inverse Laplace, max abs err %.3g (tol %.0e)", worst, kTol));
}

void criterion3() {
  constexpr double kTol = 1e-6;
  double worst = 0.0;
  for (double m : {0.5, 7.0}) {
    const ThetaParam p(m);
    for (double x : t::log_space(jtheta::quantile(p, 0.001), jtheta::quantile(p, 0.999), 200)) {
      const double h = 1e-5 * x;
      // Differentiate whichever tail is smaller to keep cancellation low.
      const double d = jtheta::cdf(p, x) < 0.5
                           ? t::central_difference([&](double v) { return jtheta::cdf(p, v); }, x, h)
                           : -t::central_difference([&](double v) { return jtheta::sf(p, v); }, x, h);
      worst = std::max(worst, rel(d, jtheta::pdf(p, x)));
    }
  }
  report(3, worst <= kTol, fmt("pdf vs central difference of cdf, max rel err %.3g (tol %.0e)", worst, kTol));
}

void criterion4() {
  constexpr double kTol = 1e-6;
  double worst = 0.0;
  for (double m : {0.5, 1.0, 7.0, 100.0}) {
    const ThetaParam p(m);
    const double lo = std::log(jtheta::quantile(p, 1e-15));
    const double hi = std::log(jtheta::quantile(p, 1.0 - 1e-15));
    // Integrate x f(x) over log x.
    const double mass = t::adaptive_simpson(
        [&](double s) {
          const double x = std::exp(s);
          return x * jtheta::pdf(p, x);
        },
        lo, hi, 1e-12);
    worst = std::max(worst, std::abs(mass - 1.0));
  }
  report(4, worst <= kTol, fmt("pdf integrates to one, max |mass - 1| %.3g (tol %.0e)", worst, kTol));
}

void criterion5() {
  constexpr double kLo = 0.9676;
  constexpr double kHi = 0.9686;
  constexpr double kTol = 1e-14;
  const double target = 2.0 * std::sqrt(2.0 / (std::exp(1.0) * kPi));
  bool exact_ok = true;
  double exact_value = 0.0;
  double worst = 0.0;
  for (double m : {0.5, 1.0, 7.0, 100.0}) {
    const ThetaParam p(m);
    const double x = m * kPi * kPi / 2.0;
    exact_value = jtheta::cdf(p, x);
    exact_ok = exact_ok && exact_value >= kLo && exact_value <= kHi;
    worst = std::max(worst, rel(jtheta::approx::asymptotic_cdf(p, x), target));
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "exact cdf at m pi^2/2 = %.7f, required in [%.4f, %.4f]", exact_value, kLo,
                kHi);
  report(5, exact_ok, buf);
  report(5, worst <= kTol,
         fmt("asymptotic cdf at boundary vs 2 sqrt(2/(e pi)), max rel err %.3g (tol %.0e)", worst, kTol));
}

void criterion6() {
  constexpr double kTol = 0.02;
  const ThetaParam p(7.0);
  const auto lp = jtheta::approx::lognormal_match(p);
  double worst = 0.0;
  const double lo = jtheta::quantile(p, 0.001);
  const double hi = jtheta::quantile(p, 0.999);
  for (int i = 0; i <= 20000; ++i) {
    const double x = lo + (hi - lo) * i / 20000.0;
    worst = std::max(worst, std::abs(jtheta::approx::lognormal_cdf(lp, x) - jtheta::cdf(p, x)));
  }
  report(6, worst < kTol, fmt("log-normal vs exact cdf at m = 7, max abs diff %.5f (tol %.2f)", worst, kTol));
}

void criterion7() {
  constexpr double kKsConst = 1.95;
  constexpr double kMeanTol = 0.01;
  constexpr double kVarTol = 0.03;
  constexpr std::size_t n = 100000;
  const ThetaParam p(7.0);
  jtheta::Rng rng(20240607);
  jtheta::SeriesSamplerConfig cfg;
  cfg.truncation_k = 10000;
  cfg.tail_policy = jtheta::TailPolicy::mean_compensate;
  std::vector<double> v = jtheta::sample_theta(rng, p, n, jtheta::SamplerMethod::series, cfg);
  std::sort(v.begin(), v.end());
  const double d = jtheta::gof::ks_one_sample(v, [&](double x) { return jtheta::cdf(p, x); });
  const double crit = kKsConst / std::sqrt(static_cast<double>(n));
  report(7, d < crit, fmt("series sampler KS distance %.5f (limit %.5f)", d, crit));
  const auto mo = t::sample_moments(v);
  const auto st = jtheta::stats(p);
  report(7, rel(mo.mean, st.mean) < kMeanTol, fmt("sample mean rel err %.4g (tol %.2f)", rel(mo.mean, st.mean), kMeanTol));
  report(7, rel(mo.variance, st.variance) < kVarTol,
         fmt("sample variance rel err %.4g (tol %.2f)", rel(mo.variance, st.variance), kVarTol));
}

void criterion8() {
  constexpr double kMeanTol = 0.02;
  constexpr double kVarTol = 0.10;
  jtheta::StudyConfig cfg;
  cfg.true_m = 7.0;
  cfg.n_per_sample = 100;
  cfg.replicates = 10000;
  cfg.seed = 1;
  cfg.u = 0.5;
  const auto r = jtheta::run_estimator_study(cfg);
  bool means_ok = true;
  std::string line = "estimator means:";
  for (const auto& s : r.summaries) {
    means_ok = means_ok && s.failures == 0 && rel(s.mean, cfg.true_m) < kMeanTol;
    char buf[96];
    std::snprintf(buf, sizeof buf, " %s=%.4f", std::string(jtheta::to_string(s.method)).c_str(), s.mean);
    line += buf;
  }
  report(8, means_ok, line + " (tol 2% of 7)");

  const auto& mle = r.summaries[static_cast<std::size_t>(jtheta::EstimatorMethod::lognormal_mle)];
  bool smallest = true;
  std::string vline = "estimator variances:";
  for (const auto& s : r.summaries) {
    if (s.method != mle.method) smallest = smallest && mle.variance < s.variance;
    char buf[96];
    std::snprintf(buf, sizeof buf, " %s=%.4f", std::string(jtheta::to_string(s.method)).c_str(), s.variance);
    vline += buf;
  }
  report(8, smallest, vline + " (log-normal MLE smallest)");

  const double sigma2 = std::log(1.4);
  const double theory = cfg.true_m * cfg.true_m * std::expm1(sigma2 / cfg.n_per_sample);
  report(8, rel(mle.variance, theory) < kVarTol,
         fmt("MLE variance %.4f vs m^2 (exp(sigma^2/n) - 1) = %.4f (tol 10%%)", mle.variance, theory));
}

void criterion9() {
  constexpr double kTol = 1e-12;
  constexpr double kBranchTol = 1e-10;
  const double e_inv = std::exp(-1.0);
  double worst = 0.0;
  // 500 points crowding the branch point and 500 crowding zero.
  for (int i = 0; i < 500; ++i) {
    const double y = -e_inv + e_inv * std::pow(10.0, -15.0 + 15.0 * i / 499.0) * 0.999999;
    const double w = jtheta::specfun::lambert_w_m1(y);
    worst = std::max(worst, std::abs(w * std::exp(w) - y) / std::abs(y));
  }
  for (int i = 0; i < 500; ++i) {
    const double y = -e_inv * std::pow(10.0, -300.0 * (i + 1) / 500.0);
    const double w = jtheta::specfun::lambert_w_m1(y);
    worst = std::max(worst, std::abs(w * std::exp(w) - y) / std::abs(y));
  }
  report(9, worst < kTol, fmt("W_-1 relative residual over 1000 points %.3g (tol %.0e)", worst, kTol));
  const double w0 = jtheta::specfun::lambert_w_m1(-e_inv);
  report(9, std::abs(w0 + 1.0) <= kBranchTol, fmt("W_-1(-1/e) = %.17g (tol %.0e)", w0, kBranchTol));
}

void criterion10() {
  constexpr double kExact = 1e-14;
  double worst = 0.0;
  for (double d : {0.5, 1.0, 4.0}) {
    for (double lambda : {0.01, 1.0, 7.0}) {
      const auto s = jtheta::stats(jtheta::apps::interference_param(d, lambda));
      worst = std::max({worst, rel(s.mean, kPi / (24.0 * lambda * d * d)),
                        rel(s.variance, kPi * kPi / (1440.0 * lambda * lambda * d * d * d * d))});
    }
  }
  report(10, worst <= kExact, fmt("interference mean/variance max rel err %.3g (tol %.0e)", worst, kExact));

  {
    constexpr std::size_t n = 1000000;
    const double lambda = 1.7;
    jtheta::Rng rng(42);
    std::vector<double> v(n);
    for (auto& x : v) x = jtheta::apps::sample_trade_flow(rng, lambda);
    std::sort(v.begin(), v.end());
    const double d = jtheta::gof::ks_one_sample(v, [&](double x) { return -std::expm1(-lambda * x); });
    const double crit = jtheta::gof::kolmogorov_critical(0.01) / std::sqrt(static_cast<double>(n));
    report(10, d < crit, fmt("Uniform * Gamma(2) vs Exponential KS %.5f (limit %.5f)", d, crit));
  }

  {
    const auto mo = jtheta::apps::sinr_moments({1.0, 7.0, 1.0, 0.01});
    const double ratio = mo.mean / std::sqrt(mo.variance);
    const double r = rel(ratio, std::sqrt(5.0) / 3.0);
    report(10, r <= kExact, fmt("SINR mean/sd = %.17g, rel err %.3g vs sqrt(5)/3", ratio, r));
  }

  {
    bool monotone = true;
    double near_zero = 1.0;
    bool mc_ok = true;
    double worst_z = 0.0;
    const std::vector<double> grid = t::log_space(1e-3, 10.0, 9);
    for (double m : {3.0, 5.0, 7.0, 9.0}) {
      const jtheta::apps::SinrScenario sc{1.0, m, 1.0, 0.01};
      double prev = 1.0;
      for (double tt : t::log_space(1e-6, 1e2, 200)) {
        const double c = jtheta::apps::coverage_probability(sc, tt);
        monotone = monotone && c <= prev;
        prev = c;
      }
      near_zero = std::min(near_zero, jtheta::apps::coverage_probability(sc, 1e-12));
      constexpr std::size_t n = 1000000;
      jtheta::Rng rng(1000 + static_cast<std::uint64_t>(m));
      std::vector<double> q(n);
      for (auto& x : q) x = jtheta::apps::sample_sinr_ratio(rng, sc);
      std::sort(q.begin(), q.end());
      for (double tt : grid) {
        const double p = jtheta::apps::coverage_probability(sc, tt);
        const double hat =
            static_cast<double>(q.end() - std::upper_bound(q.begin(), q.end(), tt)) / static_cast<double>(n);
        const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
        const double z = sd > 0.0 ? std::abs(hat - p) / sd : 0.0;
        worst_z = std::max(worst_z, z);
        mc_ok = mc_ok && std::abs(hat - p) <= 3.0 * sd + 1e-12;
      }
    }
    report(10, monotone && near_zero > 1.0 - 1e-6,
           fmt("coverage monotone decreasing, min coverage at t=1e-12 is %.9f (need > %.6f)", near_zero, 1.0 - 1e-6));
    report(10, mc_ok, fmt("coverage vs 1e6-draw Monte Carlo, worst |z| %.3f (limit %.0f sigma)", worst_z, 3.0));
  }
}

void criterion11() {
  constexpr double kTol = 1e-12;
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> log_m(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> log_y(std::log(0.05), std::log(20.0));
  std::uniform_real_distribution<double> unif(1e-6, 1.0 - 1e-6);
  double cdf_err = 0.0;
  double q_err = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double m = std::exp(log_m(gen));
    const double x = m * std::exp(log_y(gen));
    const ThetaParam p(m);
    const ThetaParam one(1.0);
    cdf_err = std::max(cdf_err, std::abs(jtheta::cdf(p, x) - jtheta::cdf(one, x / m)));
    const double u = unif(gen);
    q_err = std::max(q_err, rel(jtheta::quantile(p, u), m * jtheta::quantile(one, u)));
  }
  report(11, cdf_err <= kTol, fmt("cdf(m, x) vs cdf(1, x/m), max abs err %.3g (tol %.0e)", cdf_err, kTol));
  report(11, q_err <= kTol, fmt("quantile(m, u) vs m quantile(1, u), max rel err %.3g (tol %.0e)", q_err, kTol));

  double est_err = 0.0;
  jtheta::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const double m = std::exp(log_m(gen));
    const std::size_t n = 1 + static_cast<std::size_t>(unif(gen) * 200.0);
    const jtheta::SampleSet s(jtheta::sample_theta(rng, ThetaParam(m), n, jtheta::SamplerMethod::inverse));
    const double c = std::exp(log_m(gen));
    const double u = 0.05 + 0.9 * unif(gen);
    const auto scaled = s.scaled(c);
    for (auto method : jtheta::kAllEstimators) {
      // The asymptotic estimator is undefined past its total mass.
      const double uu = method == jtheta::EstimatorMethod::asymptotic_lambert ? std::min(u, 0.95) : u;
      const double a = jtheta::estimate(method, s, uu).m_hat;
      const double b = jtheta::estimate(method, scaled, uu).m_hat;
      est_err = std::max(est_err, rel(b, c * a));
    }
  }
  report(11, est_err <= kTol, fmt("estimator scale equivariance, max rel err %.3g (tol %.0e)", est_err, kTol));
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3,  criterion4,
                                                  criterion5, criterion6, criterion7,  criterion8,
                                                  criterion9, criterion10, criterion11};
  try {
    if (argc > 1) {
      const int k = std::atoi(argv[1]);
      if (k < 1 || k > static_cast<int>(all.size())) {
        std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], all.size());
        return 2;
      }
      all[static_cast<std::size_t>(k - 1)]();
    } else {
      for (const auto& f : all) f();
    }
  } catch (const std::exception& e) {
    std::printf("[FAIL] uncaught exception: %s\n", e.what());
    return 1;
  }
  return g_failures == 0 ? 0 : 1;
}
