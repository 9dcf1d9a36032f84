#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wraphull/hulls.hpp"
#include "wraphull/point.hpp"

namespace wraphull {

/// Point counts of a sample relative to its wrapping hull.
struct HullStats {
  std::size_t n_total = 0;
  std::size_t n_boundary = 0;
  std::size_t n_interior = 0;
  /// Boundary points that belong to no positive-area part of the hull.
  std::size_t n_isolated = 0;

  friend bool operator==(const HullStats&, const HullStats&) = default;
};

/// Splits the sample into boundary and interior points of `hull`, which must
/// have been built from exactly these points. Throws InconsistentHull if a
/// point lies outside the hull.
HullStats classify(const PointSet& points, const Hull& hull);

enum class EstimateKind { Oracle, DataDriven, CompactOracle, NaiveHullVolume, PiOpt, PiNaive };

const char* estimate_kind_name(EstimateKind k);

struct VolumeEstimate {
  double value = 0.0;
  EstimateKind kind = EstimateKind::DataDriven;
  double hull_area = 0.0;
  HullStats stats;
  std::optional<double> lambda;
};

/// N_boundary / lambda + |hull|, for known intensity.
VolumeEstimate oracle_estimate(const HullStats& stats, double hull_area, double lambda);
/// (N + 1) / (N_interior + 1) * |hull|; zero for an empty sample.
VolumeEstimate data_driven_estimate(const HullStats& stats, double hull_area);
/// N / lambda, the oracle estimator of the compact class.
VolumeEstimate compact_oracle_estimate(std::size_t n_total, double lambda);
/// |hull| alone.
VolumeEstimate naive_hull_volume(const HullStats& stats, double hull_area);

/// Convex hull dilated about its centroid by ((N+1)/(N_interior+1))^(1/2), so
/// that its area equals the data-driven estimate.
ConvexPolygon set_estimate_dilated(const PointSet& points);

/// Lepski threshold. The default compares estimates on the scale of the
/// oracle standard deviation sqrt(N_boundary) / lambda, with lambda replaced
/// by N / est_k. The other rules read kappa = N_delta / N^2 literally.
enum class KappaRule {
  BoundarySd,           // sqrt(N_boundary(r_k)) * est_k / N
  BoundaryAtCurrent,    // N_boundary(r_k) / N^2
  BoundaryAtReference,  // N_boundary(r_k') / N^2
  TotalCount,           // 1 / N
};

const char* kappa_rule_name(KappaRule rule);
std::optional<KappaRule> parse_kappa_rule(const std::string& name);

/// Defaults give the grid 0.06, 0.08, ..., 0.5.
struct LepskiConfig {
  double r_min = 0.04;
  double r_max = 0.5;
  int grid_size = 23;
  KappaRule kappa_rule = KappaRule::BoundarySd;

  /// r_k = r_min + k (r_max - r_min) / K for k = 1..K.
  std::vector<double> grid() const;
  void validate() const;
};

struct LepskiStep {
  double radius = 0.0;
  double estimate = 0.0;
  double hull_area = 0.0;
  HullStats stats;
};

struct LepskiResult {
  double r_hat = 0.0;
  std::size_t index = 0;  // position of r_hat in the grid
  double estimate = 0.0;  // data-driven estimate at r_hat
  std::vector<LepskiStep> steps;
};

/// Lepski-type radius selection over the configured grid: r_hat is r_{k-1}
/// for the first k having some k' <= k with |est_k - est_k'| > kappa, and r_K
/// when no such k exists.
LepskiResult lepski_select(const PointSet& points, const LepskiConfig& cfg);
/// Selection rule alone, on precomputed per-radius results.
std::size_t lepski_rule(const std::vector<LepskiStep>& steps, std::size_t n_total, KappaRule rule);

struct PiEstimates {
  double pi_naive = 0.0;
  double pi_opt = 0.0;
  std::size_t n_total = 0;
  std::size_t n_inside = 0;
  std::size_t n_interior = 0;
  /// No point inside the quarter disk, or none interior to its hull.
  bool degenerate = false;
};

/// Estimators of pi from points uniform on the unit square: the hit ratio
/// 4 n / N and 4 (n+1)/(n_interior+1) |conv| over the points with |x| <= 1.
PiEstimates pi_estimators(const PointSet& points_in_square);

}  // namespace wraphull
