#include "wildtorus/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace wildtorus {

double Polyline::length() const {
  double s = 0;
  for (size_t i = 0; i < segment_count(); ++i) s += norm(seg_b(i) - seg_a(i));
  return s;
}

void Polyline::bbox(Point& lo, Point& hi) const {
  lo = {HUGE_VAL, HUGE_VAL};
  hi = {-HUGE_VAL, -HUGE_VAL};
  for (const Point& p : points) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
}

bool Polyline::valid() const {
  if (points.size() < 2) return false;
  for (const Point& p : points)
    if (!finite(p)) return false;
  for (size_t i = 0; i < segment_count(); ++i)
    if (seg_a(i) == seg_b(i)) return false;
  return true;
}

double point_segment_dist2(Point p, Point a, Point b) {
  Point d = b - a;
  double dd = norm2(d);
  double t = dd > 0 ? dot(p - a, d) / dd : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  Point q = a + t * d;
  return norm2(p - q);
}

// Filtered orientation: signs are reported only when the determinant clears
// a rounding-error bound; anything inside the bound counts as collinear, and
// the collinear branches of the intersection test fall back to bounding-box
// logic. That errs toward reporting contact, which is the safe direction for
// the arc certificates (a spurious contact only triggers a refinement).
static int orient(Point a, Point b, Point c) {
  double detleft = (b.x - a.x) * (c.y - a.y);
  double detright = (b.y - a.y) * (c.x - a.x);
  double det = detleft - detright;
  double errbound = 1e-15 * (std::abs(detleft) + std::abs(detright));
  if (det > errbound) return 1;
  if (det < -errbound) return -1;
  return 0;
}

static bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  // a common point must lie in both bounding boxes; rejecting disjoint boxes
  // first also shields the orientation filter from far-apart near-collinear
  // pairs whose sign is pure rounding noise
  if (std::max(a.x, b.x) < std::min(c.x, d.x)) return false;
  if (std::max(c.x, d.x) < std::min(a.x, b.x)) return false;
  if (std::max(a.y, b.y) < std::min(c.y, d.y)) return false;
  if (std::max(c.y, d.y) < std::min(a.y, b.y)) return false;
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

namespace {

// grid hash broadphase over segments of one or two polylines
struct SegmentGrid {
  double cell;
  double x0, y0;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

  static uint64_t key(long long ix, long long iy) {
    return (uint64_t(uint32_t(ix)) << 32) | uint64_t(uint32_t(iy));
  }

  SegmentGrid(const Polyline& pl, double cell_size) : cell(cell_size) {
    Point lo, hi;
    pl.bbox(lo, hi);
    x0 = lo.x;
    y0 = lo.y;
    for (size_t i = 0; i < pl.segment_count(); ++i) insert_bbox(pl.seg_a(i), pl.seg_b(i), uint32_t(i));
  }

  void cells_of(Point a, Point b, long long& ix0, long long& iy0, long long& ix1, long long& iy1) const {
    ix0 = (long long)std::floor((std::min(a.x, b.x) - x0) / cell);
    iy0 = (long long)std::floor((std::min(a.y, b.y) - y0) / cell);
    ix1 = (long long)std::floor((std::max(a.x, b.x) - x0) / cell);
    iy1 = (long long)std::floor((std::max(a.y, b.y) - y0) / cell);
  }

  void insert_bbox(Point a, Point b, uint32_t id) {
    long long ix0, iy0, ix1, iy1;
    cells_of(a, b, ix0, iy0, ix1, iy1);
    for (long long iy = iy0; iy <= iy1; ++iy)
      for (long long ix = ix0; ix <= ix1; ++ix) buckets[key(ix, iy)].push_back(id);
  }

  template <typename Fn>
  bool visit_candidates(Point a, Point b, Fn&& fn) const {
    long long ix0, iy0, ix1, iy1;
    cells_of(a, b, ix0, iy0, ix1, iy1);
    for (long long iy = iy0; iy <= iy1; ++iy)
      for (long long ix = ix0; ix <= ix1; ++ix) {
        auto it = buckets.find(key(ix, iy));
        if (it == buckets.end()) continue;
        for (uint32_t id : it->second)
          if (fn(id)) return true;
      }
    return false;
  }
};

double median_segment_length(const Polyline& pl) {
  std::vector<double> ls;
  ls.reserve(pl.segment_count());
  for (size_t i = 0; i < pl.segment_count(); ++i) ls.push_back(norm(pl.seg_b(i) - pl.seg_a(i)));
  if (ls.empty()) return 1.0;
  std::nth_element(ls.begin(), ls.begin() + ls.size() / 2, ls.end());
  return std::max(ls[ls.size() / 2], 1e-9);
}

} // namespace

bool polyline_is_simple(const Polyline& pl) {
  if (!pl.valid()) return false;
  size_t n = pl.segment_count();
  SegmentGrid grid(pl, 4.0 * median_segment_length(pl));
  for (size_t i = 0; i < n; ++i) {
    Point a = pl.seg_a(i), b = pl.seg_b(i);
    bool bad = grid.visit_candidates(a, b, [&](uint32_t j) {
      if (j <= i) return false; // each unordered pair once
      bool adjacent = (j == i + 1) || (pl.closed && i == 0 && j == n - 1);
      if (adjacent) {
        // segments sharing an endpoint may only touch there; a collinear
        // backtrack counts as a self-intersection
        Point pa = a, pb = b, pc = pl.seg_a(j), pd = pl.seg_b(j);
        if (!(j == i + 1)) {
          std::swap(pa, pc);
          std::swap(pb, pd); // wrap case: order so that pb == pc
        }
        if (orient(pa, pb, pd) != 0) return false;
        return (on_segment(pa, pb, pd) && !(pd == pb)) || (on_segment(pc, pd, pa) && !(pa == pc));
      }
      return segments_intersect(a, b, pl.seg_a(j), pl.seg_b(j));
    });
    if (bad) return false;
  }
  return true;
}

long long polyline_required_window(const Polyline& pl) {
  Point lo, hi;
  pl.bbox(lo, hi);
  double ext = std::max(hi.x - lo.x, hi.y - lo.y);
  return (long long)std::ceil(ext) + 1;
}

std::vector<LatticeVector> window_vectors_spiral(long long window) {
  std::vector<LatticeVector> out;
  out.reserve(size_t((2 * window + 1) * (2 * window + 1) - 1));
  for (long long s = 1; s <= window; ++s) {
    long long x = s, y = 0;
    auto step = [&](long long dx, long long dy, long long n) {
      for (long long i = 0; i < n; ++i) {
        out.push_back({x, y});
        x += dx;
        y += dy;
      }
    };
    step(0, 1, s);
    step(-1, 0, 2 * s);
    step(0, -1, 2 * s);
    step(1, 0, 2 * s);
    step(0, 1, s);
  }
  return out;
}

ArcTranslateCertificate polyline_translate_disjoint(const Polyline& pl, long long window) {
  ArcTranslateCertificate cert;
  cert.window = window;
  size_t n = pl.segment_count();
  if (n == 0) return cert;
  SegmentGrid grid(pl, 4.0 * median_segment_length(pl));
  Point lo, hi;
  pl.bbox(lo, hi);
  for (LatticeVector v : window_vectors_spiral(window)) {
    double vx = double(v.p), vy = double(v.q);
    // bbox prefilter
    if (lo.x + vx > hi.x || hi.x + vx < lo.x || lo.y + vy > hi.y || hi.y + vy < lo.y) continue;
    Point off{vx, vy};
    for (size_t i = 0; i < n; ++i) {
      Point a = pl.seg_a(i) + off, b = pl.seg_b(i) + off;
      if (a.x < lo.x && b.x < lo.x) continue;
      if (a.x > hi.x && b.x > hi.x) continue;
      if (a.y < lo.y && b.y < lo.y) continue;
      if (a.y > hi.y && b.y > hi.y) continue;
      bool hit = grid.visit_candidates(a, b, [&](uint32_t j) {
        return segments_intersect(a, b, pl.seg_a(j), pl.seg_b(j));
      });
      if (hit) {
        cert.disjoint = false;
        cert.witness = v;
        cert.witness_point = a;
        return cert;
      }
    }
  }
  return cert;
}

UnimodularMap UnimodularMap::inverse() const {
  long long dt = det();
  if (dt != 1 && dt != -1) fail(Errc::not_unimodular, "matrix determinant is not +-1");
  UnimodularMap inv;
  inv.a = d * dt;
  inv.b = -b * dt;
  inv.c = -c * dt;
  inv.d = a * dt;
  // inv.t = -M^{-1} t
  inv.t = {-(inv.a * t.p + inv.b * t.q), -(inv.c * t.p + inv.d * t.q)};
  return inv;
}

Point apply_unimodular(Point p, const UnimodularMap& A) {
  if (!A.unimodular()) fail(Errc::not_unimodular, "matrix determinant is not +-1");
  return {double(A.a) * p.x + double(A.b) * p.y + double(A.t.p),
          double(A.c) * p.x + double(A.d) * p.y + double(A.t.q)};
}

LatticeVector apply_unimodular(LatticeVector v, const UnimodularMap& A) {
  if (!A.unimodular()) fail(Errc::not_unimodular, "matrix determinant is not +-1");
  return {A.a * v.p + A.b * v.q + A.t.p, A.c * v.p + A.d * v.q + A.t.q};
}

Polyline apply_unimodular(const Polyline& pl, const UnimodularMap& A) {
  Polyline out;
  out.closed = pl.closed;
  out.points.reserve(pl.points.size());
  for (Point p : pl.points) out.points.push_back(apply_unimodular(p, A));
  return out;
}

} // namespace wildtorus
