#pragma once
// Orbit computation in the cover, displacement statistics, fundamental
// domain visit sets, and direction-at-infinity coverage.
#include <cstdint>
#include <vector>

#include "wildtorus/geometry.hpp"

namespace wildtorus {

// Anything that acts on the plane as a lift of a torus map. Implemented by
// GluedTorusMap and by the plain test maps used in the suites.
struct LiftedMap {
  virtual ~LiftedMap() = default;
  virtual Point lifted_apply(Point zhat) const = 0;
  virtual Point lifted_apply_inverse(Point zhat) const = 0;
};

struct IdentityLift final : LiftedMap {
  Point lifted_apply(Point z) const override { return z; }
  Point lifted_apply_inverse(Point z) const override { return z; }
};

// rigid translation test double
struct TranslationLift final : LiftedMap {
  Point delta;
  explicit TranslationLift(Point d) : delta(d) {}
  Point lifted_apply(Point z) const override { return z + delta; }
  Point lifted_apply_inverse(Point z) const override { return z - delta; }
};

enum class OrbitDirection { forward, backward };

struct OrbitTrace {
  Point seed;
  OrbitDirection direction = OrbitDirection::forward;
  std::vector<Point> points;       // lifted, points[0] == seed, size n+1
  std::vector<Point> torus_points; // reduced mod 1
};

OrbitTrace orbit(const LiftedMap& map, Point seed, long long n,
                 OrbitDirection dir = OrbitDirection::forward);

struct RotationEstimate {
  std::vector<long long> horizons;
  std::vector<Point> seeds;
  // samples[h * seeds + s] = (f^n(z) - z)/n for n = horizons[h], seed s
  std::vector<Point> samples;
  std::vector<double> max_norm_per_horizon;
  std::vector<Point> hull; // convex hull of all samples
};

RotationEstimate rotation_estimate(const LiftedMap& map, int seed_count,
                                   const std::vector<long long>& horizons, uint64_t rng_seed);
RotationEstimate rotation_estimate_at(const LiftedMap& map, const std::vector<Point>& seeds,
                                      const std::vector<long long>& horizons);

std::vector<LatticeVector> visit_set(const OrbitTrace& trace);

struct DirectionCoverage {
  double radius = 0;
  Point base{0, 0};
  std::vector<double> angles; // sorted unit directions of far points
  double max_gap = 0;         // largest angular gap on the circle (2pi if one direction)
};

// directions of points with ||p - base|| > R; throws NoFarPoints when empty
DirectionCoverage direction_coverage(const std::vector<Point>& points, Point base, double R);

std::vector<Point> convex_hull(std::vector<Point> pts);

} // namespace wildtorus
