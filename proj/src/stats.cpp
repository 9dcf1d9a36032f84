#include "wraphull/stats.hpp"

#include <cmath>
#include <limits>

#include "wraphull/error.hpp"

namespace wraphull {

Aggregate aggregate(std::span<const double> values, double truth) {
  if (values.empty()) throw Error(ErrorCode::EmptyAggregate, "aggregate of an empty list");
  const double m = static_cast<double>(values.size());
  Aggregate a;
  a.count = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / m;
  // Two-pass sums about the mean and the truth.
  double ss = 0.0, sq = 0.0;
  for (double v : values) {
    ss += (v - a.mean) * (v - a.mean);
    sq += (v - truth) * (v - truth);
  }
  a.sd = values.size() > 1 ? std::sqrt(ss / (m - 1.0)) : 0.0;
  a.se = a.sd / std::sqrt(m);
  const double mse = sq / m;
  a.rmse = std::sqrt(mse);
  if (values.size() > 1 && a.rmse > 0.0) {
    double s4 = 0.0;
    for (double v : values) {
      const double e = (v - truth) * (v - truth) - mse;
      s4 += e * e;
    }
    a.rmse_se = std::sqrt(s4 / (m - 1.0) / m) / (2.0 * a.rmse);
  }
  return a;
}

VarianceEstimate sample_variance(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyAggregate, "variance of an empty list");
  const double m = static_cast<double>(values.size());
  if (values.size() < 4) {
    VarianceEstimate out;
    if (values.size() > 1) {
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= m;
      for (double v : values) out.variance += (v - mean) * (v - mean);
      out.variance /= m - 1.0;
    }
    out.se = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= m;
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = (v - mean) * (v - mean);
    m2 += d;
    m4 += d * d;
  }
  const double var = m2 / (m - 1.0);
  m2 /= m;
  m4 /= m;
  const double v_of_var = (m4 - m2 * m2 * (m - 3.0) / (m - 1.0)) / m;
  return {var, std::sqrt(std::max(0.0, v_of_var))};
}

RateFit fit_rate(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "rate fit needs at least two paired values");
  const double m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw Error(ErrorCode::InvalidArgument, "rate fit inputs must be strictly positive");
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx, dy = std::log(y[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) throw Error(ErrorCode::InvalidArgument, "rate fit needs distinct x values");
  RateFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return f;
}

double lambert_w(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw Error(ErrorCode::InvalidArgument, "lambert_w needs finite z >= 0");
  if (z == 0.0) return 0.0;
  double w = z < 1.0 ? z : std::log(z) - std::log(std::log(z) + 1.0) + 1.0;
  if (!(w > 0.0)) w = 0.5;
  for (int it = 0; it < 100; ++it) {
    const double ew = std::exp(w);
    const double step = (w * ew - z) / (ew * (w + 1.0));
    w -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

double polytope_rate_bound(int k, double lambda) {
  if (k < 1 || !(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "rate bound needs k >= 1 and lambda > 0");
  return k * lambert_w(lambda / k) / (lambda * lambda);
}

}  // namespace wraphull
