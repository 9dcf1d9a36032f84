#pragma once

#include <cstddef>
#include <span>

namespace wraphull {

struct Aggregate {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;    // sample standard deviation, 0 for a single value
  double rmse = 0.0;  // root mean squared deviation from the truth
  double se = 0.0;    // sd / sqrt(count)
  /// Standard error of rmse, by the delta method on the mean squared error.
  double rmse_se = 0.0;
};

/// Throws EmptyAggregate on an empty list.
Aggregate aggregate(std::span<const double> values, double truth);

/// Unbiased sample variance and the standard error of that variance estimate
/// (fourth-moment formula).
struct VarianceEstimate {
  double variance = 0.0;
  double se = 0.0;
};
VarianceEstimate sample_variance(std::span<const double> values);

/// Least squares fit of log(y) on log(x).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
RateFit fit_rate(std::span<const double> x, std::span<const double> y);

/// Principal branch of the Lambert W function for z >= 0, by Newton
/// iteration on w e^w = z.
double lambert_w(double z);

/// k W(lambda / k) / lambda^2.
double polytope_rate_bound(int k, double lambda);

}  // namespace wraphull
