#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "wraphull/point.hpp"
#include "wraphull/region.hpp"

namespace wraphull {

/// Seed plus per-replicate substream. Equal configs give bit-identical draws.
struct RngConfig {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

std::uint64_t splitmix64(std::uint64_t x);
/// Deterministic substream id for a (cell, replicate) pair.
std::uint64_t substream_id(std::uint64_t cell, std::uint64_t replicate);

class Rng {
 public:
  explicit Rng(RngConfig cfg);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

struct PppSample {
  PointSet points;
  double intensity = 0.0;
};

struct RejectionStats {
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
};

/// Homogeneous Poisson process of intensity lambda on the region: N is
/// Poisson(lambda |A|), then N uniform points by rejection from the region's
/// bounding box. Throws ZeroMeasure for a zero-area region and
/// InvalidArgument for a non-positive intensity.
PppSample sample_ppp(const Region& region, double lambda, RngConfig rng, RejectionStats* stats = nullptr);

/// Exactly n i.i.d. uniform points on the region.
PointSet sample_uniform_n(const Region& region, std::size_t n, RngConfig rng, RejectionStats* stats = nullptr);

/// n i.i.d. uniform points on the window itself (no rejection).
PointSet sample_window(const Window& window, std::size_t n, RngConfig rng);

}  // namespace wraphull
