#pragma once
// Planar primitives in universal-cover coordinates: points, integer lattice
// vectors, polylines (compact arcs), and unimodular lattice maps.
#include <cmath>
#include <cstdint>
#include <vector>

#include "wildtorus/errors.hpp"

namespace wildtorus {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct LatticeVector {
  long long p = 0;
  long long q = 0;
};

inline bool operator==(LatticeVector a, LatticeVector b) { return a.p == b.p && a.q == b.q; }
inline bool operator!=(LatticeVector a, LatticeVector b) { return !(a == b); }
inline LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.p + b.p, a.q + b.q}; }
inline LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.p - b.p, a.q - b.q}; }
inline Point to_point(LatticeVector v) { return {double(v.p), double(v.q)}; }

// Ordered point sequence representing a compact arc; closed polylines wrap
// from back() to front().
struct Polyline {
  std::vector<Point> points;
  bool closed = false;

  size_t segment_count() const {
    if (points.size() < 2) return 0;
    return closed ? points.size() : points.size() - 1;
  }
  Point seg_a(size_t i) const { return points[i]; }
  Point seg_b(size_t i) const { return points[(i + 1) % points.size()]; }
  double length() const;
  void bbox(Point& lo, Point& hi) const;
  // consecutive points distinct, all coordinates finite, >= 2 points
  bool valid() const;
};

// squared distance from p to segment [a,b]
double point_segment_dist2(Point p, Point a, Point b);

// closed-segment intersection test (shared endpoints count as intersection)
bool segments_intersect(Point a, Point b, Point c, Point d);

// Exhaustive check that no two non-adjacent segments intersect. Uses a grid
// broadphase; exact in the segment predicate sense.
bool polyline_is_simple(const Polyline& pl);

// [arc] disjoint from [arc]+v for every nonzero v with |v_x|,|v_y| <= window.
// The window must dominate the arc bounding box (extent+1) or the result
// is not a certificate; callers use required_window().
struct ArcTranslateCertificate {
  bool disjoint = true;
  LatticeVector witness{0, 0};
  Point witness_point{0, 0};
  long long window = 0;
};
long long polyline_required_window(const Polyline& pl);
ArcTranslateCertificate polyline_translate_disjoint(const Polyline& pl, long long window);

// nonzero lattice vectors with |v|_inf <= window, shell by shell, each shell
// walked counterclockwise from (s, 0); the scan order behind every
// translate-disjointness witness
std::vector<LatticeVector> window_vectors_spiral(long long window);

// Integer affine map  z -> M z + t  with det(M) = +-1.
struct UnimodularMap {
  long long a = 1, b = 0, c = 0, d = 1;
  LatticeVector t{0, 0};

  long long det() const { return a * d - b * c; }
  bool unimodular() const { return det() == 1 || det() == -1; }
  UnimodularMap inverse() const;
};

Point apply_unimodular(Point p, const UnimodularMap& A);
LatticeVector apply_unimodular(LatticeVector v, const UnimodularMap& A);
Polyline apply_unimodular(const Polyline& pl, const UnimodularMap& A);

} // namespace wildtorus
