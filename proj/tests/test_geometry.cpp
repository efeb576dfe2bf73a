#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wildtorus/geometry.hpp"

using namespace wildtorus;

TEST_CASE("segment intersection basics") {
  CHECK(segments_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  // shared endpoint counts
  CHECK(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 1}));
  // collinear overlap
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {1.5, 0}, {3, 0}));
}

TEST_CASE("point-segment distance") {
  CHECK(point_segment_dist2({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(point_segment_dist2({2, 0}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(point_segment_dist2({0.5, 0}, {-1, 0}, {1, 0}) == doctest::Approx(0.0));
}

TEST_CASE("polyline validity and simplicity") {
  Polyline pl;
  pl.points = {{0, 0}, {1, 0}, {1, 1}};
  CHECK(pl.valid());
  CHECK(polyline_is_simple(pl));

  Polyline repeated;
  repeated.points = {{0, 0}, {0, 0}};
  CHECK_FALSE(repeated.valid());

  Polyline crossing;
  crossing.points = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_FALSE(polyline_is_simple(crossing));

  Polyline backtrack;
  backtrack.points = {{0, 0}, {2, 0}, {1, 0}};
  CHECK_FALSE(polyline_is_simple(backtrack));
}

TEST_CASE("polyline translate disjointness matches brute force") {
  Polyline diag;
  diag.points = {{0.1, 0.2}, {0.4, 0.55}};
  auto cert = polyline_translate_disjoint(diag, polyline_required_window(diag));
  CHECK(cert.disjoint);
  CHECK(oracle::arc_translate_disjoint_brute(diag, 2));

  Polyline wide;
  wide.points = {{0.25, 0.0}, {1.75, 0.0}};
  auto cert2 = polyline_translate_disjoint(wide, polyline_required_window(wide));
  CHECK_FALSE(cert2.disjoint);
  CHECK(cert2.witness == LatticeVector{1, 0});
  CHECK_FALSE(oracle::arc_translate_disjoint_brute(wide, 3));
}

TEST_CASE("unimodular maps") {
  UnimodularMap id;
  Point p{0.3, 0.7};
  CHECK(apply_unimodular(p, id) == p);

  // rows (a,b),(-q,p) with ap+bq=1 send (p,q) to (1,0)
  UnimodularMap A{-1, 1, -3, 2, {0, 0}};
  CHECK(A.det() == 1);
  LatticeVector v{2, 3};
  auto w = apply_unimodular(v, A);
  CHECK(w.p == 1);
  CHECK(w.q == 0);

  auto inv = A.inverse();
  auto round = apply_unimodular(apply_unimodular(v, A), inv);
  CHECK(round == v);

  UnimodularMap bad{2, 0, 0, 2, {0, 0}};
  CHECK_THROWS_AS(apply_unimodular(p, bad), Error);
}

TEST_CASE("unimodular maps preserve the lattice") {
  uint64_t state = 7;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (long long)(state >> 40) % 5 - 2;
  };
  for (int trial = 0; trial < 200; ++trial) {
    long long a = next(), b = next();
    long long c, d;
    // complete (a,b) to a det +-1 matrix when possible, else skip
    bool found = false;
    for (c = -3; c <= 3 && !found; ++c)
      for (d = -3; d <= 3 && !found; ++d)
        if (a * d - b * c == 1 || a * d - b * c == -1) found = true;
    if (!found) continue;
    --c;
    --d; // undo loop increments
    for (c = -3; c <= 3; ++c) {
      bool done = false;
      for (d = -3; d <= 3; ++d)
        if (a * d - b * c == 1 || a * d - b * c == -1) {
          done = true;
          break;
        }
      if (done) break;
    }
    UnimodularMap A{a, b, c, d, {next(), next()}};
    REQUIRE(A.unimodular());
    LatticeVector v{next(), next()};
    auto w = apply_unimodular(v, A);
    Point pw = apply_unimodular(to_point(v), A);
    CHECK(pw.x == double(w.p));
    CHECK(pw.y == double(w.q));
  }
}
