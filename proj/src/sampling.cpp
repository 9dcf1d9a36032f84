#include "wraphull/sampling.hpp"

#include "wraphull/error.hpp"

namespace wraphull {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t substream_id(std::uint64_t cell, std::uint64_t replicate) {
  return splitmix64(splitmix64(cell) ^ (replicate + 0x632BE59BD9B4E019ull));
}

Rng::Rng(RngConfig cfg) : engine_(splitmix64(cfg.seed ^ splitmix64(cfg.stream_id + 0xD1B54A32D192ED03ull))) {}

std::uint64_t Rng::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  std::poisson_distribution<std::uint64_t> dist(mean);
  return dist(engine_);
}

namespace {

void check_region(const Region& region) {
  if (!(region.exact_area() > 0.0)) throw Error(ErrorCode::ZeroMeasure, "region has zero area");
}

std::vector<Point> draw(const Region& region, std::size_t n, Rng& rng, RejectionStats* stats) {
  const auto bb = region.bounding_box();
  std::vector<Point> pts;
  pts.reserve(n);
  const bool one_d = region.dim() == 1;
  while (pts.size() < n) {
    Point p{rng.uniform(bb[0], bb[1]), one_d ? 0.0 : rng.uniform(bb[2], bb[3])};
    if (stats) ++stats->proposals;
    if (!region.contains(p)) continue;
    if (stats) ++stats->accepted;
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

PppSample sample_ppp(const Region& region, double lambda, RngConfig cfg, RejectionStats* stats) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorCode::InvalidArgument, "intensity must be positive");
  check_region(region);
  Rng rng(cfg);
  const std::uint64_t n = rng.poisson(lambda * region.exact_area());
  return {PointSet(draw(region, n, rng, stats), region.window()), lambda};
}

PointSet sample_uniform_n(const Region& region, std::size_t n, RngConfig cfg, RejectionStats* stats) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample size must be positive");
  check_region(region);
  Rng rng(cfg);
  return PointSet(draw(region, n, rng, stats), region.window());
}

PointSet sample_window(const Window& window, std::size_t n, RngConfig cfg) {
  Rng rng(cfg);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(window.lo(0), window.hi(0));
    const double y = window.dim() == 1 ? 0.0 : rng.uniform(window.lo(1), window.hi(1));
    pts.push_back({x, y});
  }
  return PointSet(std::move(pts), window);
}

}  // namespace wraphull
