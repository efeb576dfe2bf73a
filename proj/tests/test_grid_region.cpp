#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wildtorus/grid_region.hpp"

using namespace wildtorus;

namespace {

GridRegion disk_region(int m, Point center, double radius) {
  Polyline tiny;
  tiny.points = {center, center + Point{1e-7, 0}};
  return tube(tiny, radius, m);
}

GridRegion annulus_region(int m, Point center, double r_in, double r_out) {
  GridRegion big = disk_region(m, center, r_out);
  GridRegion small = disk_region(m, center, r_in);
  GridRegion out = big;
  for (long long gy = small.oy; gy < small.oy + small.h; ++gy)
    for (long long gx = small.ox; gx < small.ox + small.w; ++gx)
      if (small.get(gx, gy) && out.in_bounds(gx, gy)) out.set(gx, gy, false);
  out.trim();
  return out;
}

} // namespace

TEST_CASE("translate is exact and invertible") {
  uint64_t state = 1;
  GridRegion r = oracle::random_region(state, 16);
  CHECK(translate(r, {0, 0}) == r);
  CHECK(translate(translate(r, {1, 2}), {-1, -2}) == r);

  GridRegion one = GridRegion::from_extent(16, 0, 0, 1, 1);
  one.set(0, 0);
  GridRegion moved = translate(one, {1, 0});
  CHECK(moved.get(16, 0));
  CHECK(moved.count() == 1);
}

TEST_CASE("translate exactness property: cells shift by m*v") {
  uint64_t state = 99;
  for (int trial = 0; trial < 10; ++trial) {
    GridRegion r = oracle::random_region(state, 16);
    LatticeVector v{(long long)(state % 5) - 2, (long long)((state >> 8) % 5) - 2};
    GridRegion t = translate(r, v);
    CHECK(t.count() == r.count());
    for (long long gy = r.oy; gy < r.oy + r.h; ++gy)
      for (long long gx = r.ox; gx < r.ox + r.w; ++gx)
        if (r.get(gx, gy)) CHECK(t.get(gx + 16 * v.p, gy + 16 * v.q));
  }
}

TEST_CASE("disjoint_from_translates: examples") {
  // unit-diameter blob centered at (0.5, 0.5)
  GridRegion blob = disk_region(64, {0.5, 0.5}, 0.45);
  auto cert = disjoint_from_translates(blob, 2);
  CHECK(cert.disjoint);

  // horizontal bar from x=0 to 1.5, height ~0.1
  Polyline bar;
  bar.points = {{0.0, 0.05}, {1.5, 0.05}};
  GridRegion barr = tube(bar, 0.05, 64);
  auto cert2 = disjoint_from_translates(barr, 3);
  CHECK_FALSE(cert2.disjoint);
  CHECK(cert2.witness == LatticeVector{1, 0});

  GridRegion empty = GridRegion::empty(64);
  CHECK(disjoint_from_translates(empty, 1).disjoint);
}

TEST_CASE("disjoint_from_translates: window validation") {
  Polyline bar;
  bar.points = {{0.0, 0.0}, {2.5, 0.0}};
  GridRegion r = tube(bar, 0.05, 64);
  CHECK_THROWS_AS(disjoint_from_translates(r, 2), Error); // needs ceil(2.6)+1 = 4
  CHECK_NOTHROW(disjoint_from_translates(r, 4));
}

TEST_CASE("disjointness certificate matches brute force with 2x window") {
  uint64_t state = 1234;
  for (int trial = 0; trial < 12; ++trial) {
    GridRegion r = oracle::random_region(state, 16, 3);
    long long w = required_window(r);
    for (int gap = 0; gap <= 1; ++gap) {
      bool fast = disjoint_from_translates(r, w, gap).disjoint;
      bool brute = oracle::region_translate_disjoint_brute(r, 2 * w, gap);
      CHECK_MESSAGE(fast == brute, "trial ", trial, " gap ", gap);
    }
  }
}

TEST_CASE("tube: stadium area within 10% of analytic value") {
  Polyline seg;
  seg.points = {{0, 0}, {1, 0}};
  double radius = 0.1;
  GridRegion t = tube(seg, radius, 64);
  double area = double(t.count()) / (64.0 * 64.0);
  double analytic = 2 * radius * 1.0 + M_PI * radius * radius;
  CHECK(std::abs(area - analytic) / analytic < 0.10);
}

TEST_CASE("tube: guards") {
  Polyline seg;
  seg.points = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(tube(seg, 0.1, 64), Error); // invalid polyline
  Polyline ok;
  ok.points = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(tube(ok, 1.0 / 64, 64), Error); // radius below two cells
}

TEST_CASE("tube: L-shaped polyline is grid-connected") {
  Polyline ell;
  ell.points = {{0, 0}, {0.5, 0}, {0.5, 0.5}};
  GridRegion t = tube(ell, 0.05, 64);
  CHECK(oracle::region_connected_brute(t));
  CHECK(grid_connected(t));
}

TEST_CASE("fill_holes: disk unchanged, annulus filled, idempotent, monotone") {
  GridRegion disk = disk_region(64, {0, 0}, 0.3);
  CHECK(fill_holes(disk).count() == disk.count());

  GridRegion ann = annulus_region(64, {0, 0}, 0.15, 0.3);
  GridRegion filled = fill_holes(ann);
  CHECK(filled.count() > ann.count());
  GridRegion disk_like = fill_holes(filled);
  CHECK(disk_like == filled); // idempotent
  CHECK(region_subset(ann, filled)); // monotone

  uint64_t state = 5;
  for (int trial = 0; trial < 8; ++trial) {
    GridRegion r = oracle::random_region(state, 16, 3);
    GridRegion f = fill_holes(r);
    CHECK(region_subset(r, f));
    CHECK(fill_holes(f) == f);
  }
}

TEST_CASE("simply_connected_certificate") {
  GridRegion disk = disk_region(64, {0, 0}, 0.3);
  CHECK(simply_connected_certificate(disk));

  GridRegion ann = annulus_region(64, {0, 0}, 0.15, 0.3);
  CHECK_FALSE(simply_connected_certificate(ann));

  GridRegion two = disk_region(64, {0, 0}, 0.1);
  GridRegion other = disk_region(64, {1.5, 0}, 0.1);
  GridRegion both = region_union(two, other);
  CHECK_FALSE(simply_connected_certificate(both));

  GridRegion empty = GridRegion::empty(64);
  CHECK_THROWS_AS(simply_connected_certificate(empty), Error);
}

TEST_CASE("fill_holes of any connected region is simply connected") {
  uint64_t state = 77;
  int done = 0;
  for (int trial = 0; trial < 30 && done < 8; ++trial) {
    GridRegion r = oracle::random_region(state, 16, 3);
    if (!grid_connected(r)) continue;
    ++done;
    CHECK(simply_connected_certificate(fill_holes(r)));
  }
  CHECK(done > 0);
}

TEST_CASE("distance transform and dilate") {
  GridRegion one = GridRegion::from_extent(64, 0, 0, 1, 1);
  one.set(0, 0);
  long long fw, fh;
  auto d2 = distance_transform_sq(one, 3, fw, fh);
  CHECK(fw == 7);
  CHECK(fh == 7);
  // center cell has distance 0; corner of frame has distance sqrt(18)
  CHECK(d2[size_t(3 * fw + 3)] == 0.0);
  CHECK(d2[size_t(0 * fw + 0)] == doctest::Approx(18.0));

  GridRegion grown = dilate(one, 2.0);
  // cells with center distance <= 2: the 13-cell diamond-ish disk
  CHECK(grown.count() == 13);
  CHECK(grown.get(2, 0));
  CHECK_FALSE(grown.get(2, 1)); // distance sqrt(5) > 2
}

TEST_CASE("translate_clearance") {
  // two cells far apart within one region: clearance to translates is the
  // min over nonzero v of distances between the set and its shift
  GridRegion r = GridRegion::from_extent(64, 0, 0, 40, 1);
  r.set(0, 0);
  r.set(39, 0);
  // translate by (1,0): shift 64 cells; distance between cell 39 and 64 is 25
  double c = translate_clearance(r, 100.0);
  CHECK(c == doctest::Approx(25.0));
}

TEST_CASE("region save/load round trip is bit exact") {
  uint64_t state = 31;
  for (int trial = 0; trial < 6; ++trial) {
    GridRegion r = oracle::random_region(state, 16, 3);
    GridRegion back = load_gridregion(save_gridregion(r));
    CHECK(back == r);
  }
  GridRegion empty = GridRegion::from_extent(16, -3, 4, 5, 2);
  CHECK(load_gridregion(save_gridregion(empty)) == empty);
}

TEST_CASE("reduced measure") {
  GridRegion full = GridRegion::from_extent(64, 0, 0, 64, 64);
  for (long long y = 0; y < 64; ++y)
    for (long long x = 0; x < 64; ++x) full.set(x, y);
  CHECK(reduced_measure(full) == doctest::Approx(1.0));
  GridRegion empty = GridRegion::empty(64);
  CHECK(reduced_measure(empty) == doctest::Approx(0.0));
  // two cells in distinct translates covering the same torus cell
  GridRegion twin = GridRegion::from_extent(64, 0, 0, 65, 1);
  twin.set(0, 0);
  twin.set(64, 0);
  CHECK(reduce_mod_lattice(twin).count() == 1);
}
