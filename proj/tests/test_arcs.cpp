#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "wildtorus/arcs.hpp"
#include "wildtorus/rng.hpp"

using namespace wildtorus;

TEST_CASE("straight branch when the segment misses its translates") {
  ArcBranch branch;
  Polyline arc = simple_projecting_arc({0, 0}, {0.3, 0.37}, {}, branch);
  CHECK(branch == ArcBranch::straight);
  CHECK(arc.points.front() == Point{0, 0});
  CHECK(arc.points.back() == Point{0.3, 0.37});
  CHECK(arc.points.size() >= 2);
  CHECK(oracle::arc_translate_disjoint_brute(arc, 2));
}

TEST_CASE("same torus point is rejected") {
  CHECK_THROWS_AS(simple_projecting_arc({0.25, 0.5}, {1.25, 2.5}), Error);
}

TEST_CASE("formula branch: horizontal case") {
  ArcBranch branch;
  Polyline arc = simple_projecting_arc({0.25, 0.0}, {1.75, 0.0}, {}, branch);
  CHECK(branch == ArcBranch::formula);
  // endpoints exact
  CHECK(arc.points.front() == Point{0.25, 0.0});
  CHECK(arc.points.back() == Point{1.75, 0.0});
  // sampling density: at least 64 points per unit length
  CHECK(arc.points.size() >= size_t(64 * 1.5));
  // vertical width below 1/2
  double ymin = 1e9, ymax = -1e9;
  for (const Point& p : arc.points) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  CHECK(ymax - ymin < 0.5);
  CHECK(polyline_is_simple(arc));
  CHECK(oracle::arc_translate_disjoint_brute(arc, polyline_required_window(arc)));
}

TEST_CASE("formula branch: skew witness reduced by a unimodular map") {
  // direction parallel to (1,1), long enough to hit the (1,1) translate
  ArcBranch branch;
  Polyline arc = simple_projecting_arc({0.1, 0.2}, {1.6, 1.7}, {}, branch);
  CHECK(branch == ArcBranch::formula);
  CHECK(arc.points.front() == Point{0.1, 0.2});
  CHECK(arc.points.back() == Point{1.6, 1.7});
  CHECK(polyline_is_simple(arc));
  CHECK(oracle::arc_translate_disjoint_brute(arc, polyline_required_window(arc)));
}

TEST_CASE("random endpoint pairs always certify") {
  SplitMix64 rng(2024);
  int formula_seen = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Point a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Point b;
    if (trial % 3 == 0) {
      // force the formula branch: b - a along a primitive integer direction
      long long p = 1 + (long long)rng.below(3);
      long long q = (long long)rng.below(3);
      if (std::gcd(p, q) != 1) q = 1;
      double kappa = 1.2 + rng.uniform01(); // non-integer, > 1
      b = a + kappa * Point{double(p), double(q)};
    } else {
      b = a + Point{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    }
    Point d = b - a;
    if (d.x == std::round(d.x) && d.y == std::round(d.y)) continue;
    ArcBranch branch;
    Polyline arc = simple_projecting_arc(a, b, {}, branch);
    if (branch == ArcBranch::formula) ++formula_seen;
    CHECK(arc.points.front() == a);
    CHECK(arc.points.back() == b);
    CHECK(polyline_is_simple(arc));
    CHECK(oracle::arc_translate_disjoint_brute(arc, polyline_required_window(arc)));
  }
  CHECK(formula_seen >= 3);
}

TEST_CASE("detour: arc disjoint from collar is unchanged") {
  Polyline arc;
  arc.points = {{0, 0}, {1, 0}};
  // obstacle far away
  Polyline blob;
  blob.points = {{0.5, 2.0}, {0.6, 2.0}};
  GridRegion obstacle = tube(blob, 0.05, 64);
  GridRegion collar = dilate(obstacle, 4.0);
  Polyline out = detour_around(arc, obstacle, collar);
  CHECK(out.points == arc.points);
}

TEST_CASE("detour: straight arc crossing a disk obstacle") {
  Polyline arc;
  arc.points.clear();
  for (int i = 0; i <= 64; ++i) arc.points.push_back({i / 64.0, 0.0});

  Polyline blobseed;
  blobseed.points = {{0.5, 0.0}, {0.5 + 1e-7, 0.0}};
  GridRegion obstacle = tube(blobseed, 0.08, 64); // disk of radius ~0.08 at (0.5, 0)
  GridRegion collar = dilate(obstacle, 6.0);      // annular collar, 6 cells wider

  Polyline out = detour_around(arc, obstacle, collar, 1.0);
  CHECK(out.points.front() == arc.points.front());
  CHECK(out.points.back() == arc.points.back());
  // output avoids the obstacle entirely
  CHECK_FALSE(regions_intersect(rasterize_arc(out, 64), obstacle));
  CHECK(polyline_is_simple(out));
}

TEST_CASE("detour: no channel when the collar is severed") {
  // obstacle equal to collar minus a hair: make collar = dilate(obstacle, 1)
  // and forbid margin 1 -> channel has zero width
  Polyline blobseed;
  blobseed.points = {{0.5, 0.0}, {0.5 + 1e-7, 0.0}};
  GridRegion obstacle = tube(blobseed, 0.08, 64);
  GridRegion collar = dilate(obstacle, 1.0);
  Polyline arc;
  for (int i = 0; i <= 64; ++i) arc.points.push_back({i / 64.0, 0.0});
  CHECK_THROWS_AS(detour_around(arc, obstacle, collar, 1.0), Error);
}
