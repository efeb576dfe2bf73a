#include "wildtorus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wildtorus/errors.hpp"
#include "wildtorus/rng.hpp"
#include "wildtorus/threads.hpp"

namespace wildtorus {

namespace {

Point reduce_mod1(Point p) {
  return {p.x - std::floor(p.x), p.y - std::floor(p.y)};
}

} // namespace

OrbitTrace orbit(const LiftedMap& map, Point seed, long long n, OrbitDirection dir) {
  if (n < 1) fail(Errc::bad_argument, "orbit length must be >= 1");
  OrbitTrace trace;
  trace.seed = seed;
  trace.direction = dir;
  trace.points.reserve(size_t(n + 1));
  trace.torus_points.reserve(size_t(n + 1));
  Point z = seed;
  trace.points.push_back(z);
  trace.torus_points.push_back(reduce_mod1(z));
  for (long long i = 0; i < n; ++i) {
    z = dir == OrbitDirection::forward ? map.lifted_apply(z) : map.lifted_apply_inverse(z);
    trace.points.push_back(z);
    trace.torus_points.push_back(reduce_mod1(z));
  }
  return trace;
}

RotationEstimate rotation_estimate_at(const LiftedMap& map, const std::vector<Point>& seeds,
                                      const std::vector<long long>& horizons) {
  if (seeds.empty()) fail(Errc::bad_argument, "rotation estimate needs seeds");
  if (horizons.empty() || !std::is_sorted(horizons.begin(), horizons.end()) || horizons.front() < 1)
    fail(Errc::bad_argument, "horizons must be increasing positive integers");
  RotationEstimate est;
  est.horizons = horizons;
  est.seeds = seeds;
  est.samples.assign(horizons.size() * seeds.size(), Point{});
  long long n_max = horizons.back();
  parallel_for(seeds.size(), [&](size_t s) {
    Point z0 = seeds[s];
    Point z = z0;
    size_t next_h = 0;
    for (long long n = 1; n <= n_max && next_h < horizons.size(); ++n) {
      z = map.lifted_apply(z);
      if (n == horizons[next_h]) {
        Point d = z - z0;
        est.samples[next_h * seeds.size() + s] = {d.x / double(n), d.y / double(n)};
        ++next_h;
      }
    }
  });
  est.max_norm_per_horizon.assign(horizons.size(), 0.0);
  for (size_t h = 0; h < horizons.size(); ++h)
    for (size_t s = 0; s < seeds.size(); ++s)
      est.max_norm_per_horizon[h] =
          std::max(est.max_norm_per_horizon[h], norm(est.samples[h * seeds.size() + s]));
  est.hull = convex_hull(est.samples);
  return est;
}

RotationEstimate rotation_estimate(const LiftedMap& map, int seed_count,
                                   const std::vector<long long>& horizons, uint64_t rng_seed) {
  if (seed_count < 1) fail(Errc::bad_argument, "seed count must be >= 1");
  SplitMix64 rng(rng_seed);
  std::vector<Point> seeds;
  seeds.reserve(size_t(seed_count));
  for (int i = 0; i < seed_count; ++i) seeds.push_back({rng.uniform01(), rng.uniform01()});
  return rotation_estimate_at(map, seeds, horizons);
}

std::vector<LatticeVector> visit_set(const OrbitTrace& trace) {
  std::set<std::pair<long long, long long>> cells;
  for (const Point& p : trace.points)
    cells.insert({(long long)std::floor(p.x), (long long)std::floor(p.y)});
  std::vector<LatticeVector> out;
  out.reserve(cells.size());
  for (const auto& [p, q] : cells) out.push_back({p, q});
  return out;
}

DirectionCoverage direction_coverage(const std::vector<Point>& points, Point base, double R) {
  if (!(R > 0)) fail(Errc::bad_argument, "direction radius must be positive");
  DirectionCoverage cov;
  cov.radius = R;
  cov.base = base;
  for (const Point& p : points) {
    Point d = p - base;
    if (norm(d) > R) cov.angles.push_back(std::atan2(d.y, d.x));
  }
  if (cov.angles.empty()) fail(Errc::no_far_points, "no points beyond the direction radius");
  std::sort(cov.angles.begin(), cov.angles.end());
  double gap = 2.0 * M_PI - (cov.angles.back() - cov.angles.front());
  for (size_t i = 1; i < cov.angles.size(); ++i)
    gap = std::max(gap, cov.angles[i] - cov.angles[i - 1]);
  cov.max_gap = gap;
  return cov;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](Point a, Point b) { return a == b; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  size_t k = 0;
  for (const Point& p : pts) { // lower
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) { // upper
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

} // namespace wildtorus
