#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wraphull/estimators.hpp"
#include "wraphull/hulls.hpp"
#include "wraphull/region.hpp"
#include "wraphull/sampling.hpp"
#include "wraphull/stats.hpp"

namespace wraphull {

enum class Experiment { Table1, Table2Adaptive, PiRates, EfronCheck, PolytopeRate, SingleRun };

const char* experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(const std::string& name);

struct ExperimentConfig {
  Experiment experiment = Experiment::Table1;
  std::string region = "annulus";
  HullClass hull_class = HullClass::RConvex;
  std::vector<double> radii;    // table1 grid; single_run uses the first
  int normal_count = 4;
  std::vector<double> sizes;    // n = lambda |A| for the tables, N for pi
  std::vector<double> lambdas;  // efron, polytope, single_run
  int replicates = 200;
  std::uint64_t seed = 20240601;
  int raster = 1024;
  bool diagnostics = false;  // table1: rasterized missing volume, alpha and r terms
  int threads = 0;           // 0 = hardware concurrency
  LepskiConfig lepski;

  /// Published setup for each experiment.
  static ExperimentConfig defaults(Experiment e);
  /// Throws InvalidArgument for empty or non-increasing grids, M < 1 and the like.
  void validate() const;
};

/// Rasterized |A \ hull| and |hull \ A| over the window, res x res pixel centers.
struct RasterVolumes {
  double missing = 0.0;
  double excess = 0.0;
};
RasterVolumes raster_volumes(const Region& region, const Hull& hull, int res);

/// Monte Carlo versions of the oracle inequality terms, with c1 = 1.
struct OracleDiagnostics {
  double mean_missing = 0.0;
  double var_missing = 0.0;
  double mean_excess = 0.0;
  double alpha = 0.0;
  double r_term = 0.0;
};

struct McRow {
  double r = 0.0;
  double n = 0.0;
  double lambda = 0.0;
  Aggregate n_total, n_interior, n_boundary, n_isolated;
  Aggregate oracle, data_driven;
  double ratio = 0.0;
  std::size_t failures = 0;
  std::optional<OracleDiagnostics> diagnostics;
};

struct AdaptiveRow {
  double n = 0.0;
  Aggregate r_hat;
  Aggregate estimate;
  std::size_t failures = 0;
};

struct PiRow {
  double n = 0.0;
  Aggregate naive, opt;
  std::size_t degenerate = 0;
};
struct PiResult {
  std::vector<PiRow> rows;
  RateFit naive, opt;
};

struct EfronReport {
  double lambda = 0.0;
  double area = 0.0;
  std::size_t replicates = 0;
  Aggregate n_boundary, missing, oracle;
  double lambda_mean_missing = 0.0;
  bool defined = false;  // false when fewer than two replicates
  double z = 0.0;        // difference over the combined standard error
  double z_paired = 0.0;
  double z_unbiased = 0.0;  // oracle mean against |A|
  double var_oracle_lambda = 0.0;
  double var_oracle_lambda_se = 0.0;
  double z_risk = 0.0;  // Var(oracle) lambda against mean missing volume
  std::size_t failures = 0;
};

struct PolytopeRow {
  int k = 0;
  double lambda = 0.0;
  double mse = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};
struct PolytopeResult {
  std::vector<PolytopeRow> rows;
  double max_ratio = 0.0;
  double growth = 0.0;  // ratio at the largest lambda over ratio at the smallest
  bool bounded = false;
};

struct SingleRun {
  PppSample sample;
  Hull hull;
  double radius = 0.0;
  std::vector<VolumeEstimate> estimates;
};

std::vector<McRow> run_table1(const ExperimentConfig& cfg);
std::vector<AdaptiveRow> run_table2_adaptive(const ExperimentConfig& cfg);
PiResult run_pi_rates(const ExperimentConfig& cfg);
EfronReport run_efron_check(const ExperimentConfig& cfg);
PolytopeResult run_polytope_rate(const ExperimentConfig& cfg);
SingleRun single_run(const ExperimentConfig& cfg);

void write_table1_csv(std::ostream& out, const std::vector<McRow>& rows);
void write_table1_diagnostics_csv(std::ostream& out, const std::vector<McRow>& rows);
void write_table2_csv(std::ostream& out, const std::vector<AdaptiveRow>& rows);
void write_pi_csv(std::ostream& out, const PiResult& result);
void write_efron_csv(std::ostream& out, const EfronReport& report);
void write_polytope_csv(std::ostream& out, const PolytopeResult& result);
void write_manifest(std::ostream& out, const ExperimentConfig& cfg);

/// Runs the configured experiment, writes `<name>.csv` and `<name>.manifest`
/// (and single-run sample, hull and estimate files) into `out_dir`, and
/// prints machine-readable summary lines to `summary`. Returns false when an
/// experiment-level check fails (efron, polytope-rate).
bool run_experiment(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& summary);

}  // namespace wraphull
