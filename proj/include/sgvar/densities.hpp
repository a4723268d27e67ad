// Scalar log-densities and numeric helpers shared across the prior,
// likelihood and scoring code.
#pragma once

#include <algorithm>
#include <cmath>

namespace sgvar {

inline constexpr double kLogTwoPi = 1.8378770664093454836;

/// log N(x; mean, var).
inline double log_normal_pdf(double x, double mean, double var) {
  const double r = x - mean;
  return -0.5 * (kLogTwoPi + std::log(var) + r * r / var);
}

/// log Gamma(x; shape, rate).
inline double log_gamma_pdf(double x, double shape, double rate) {
  return shape * std::log(rate) - std::lgamma(shape) +
         (shape - 1.0) * std::log(x) - rate * x;
}

/// log Beta(x; a, b).
inline double log_beta_pdf(double x, double a, double b) {
  const double log_b = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_b;
}

inline double logit(double x) { return std::log(x) - std::log1p(-x); }

inline double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double log_sum_exp(double a, double b) {
  const double hi = std::max(a, b);
  if (!std::isfinite(hi)) return hi;
  return hi + std::log(std::exp(a - hi) + std::exp(b - hi));
}

/// P(gamma = 1) for log-odds x = log(p1/p0), overflow-safe.
inline double prob_from_log_odds(double x) { return logistic(x); }

/// phi(z), standard normal density.
inline double std_normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

/// Phi(z), standard normal CDF.
inline double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace sgvar
