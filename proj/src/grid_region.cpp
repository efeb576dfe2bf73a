#include "wildtorus/grid_region.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <deque>
#include <sstream>

#include "wildtorus/kernels.hpp"

namespace wildtorus {

namespace {

bool power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

void check_m(int m) {
  if (m < 16 || !power_of_two(m)) fail(Errc::bad_argument, "grid m must be a power of two >= 16");
}

} // namespace

GridRegion GridRegion::empty(int m) {
  check_m(m);
  GridRegion r;
  r.m = m;
  return r;
}

GridRegion GridRegion::from_extent(int m, long long ox, long long oy, long long w, long long h) {
  check_m(m);
  if (w < 0 || h < 0) fail(Errc::bad_argument, "negative region extent");
  GridRegion r;
  r.m = m;
  r.ox = ox;
  r.oy = oy;
  r.w = w;
  r.h = h;
  r.bits.assign(size_t(((w + 63) / 64) * h), 0);
  return r;
}

bool GridRegion::get(long long gx, long long gy) const {
  if (!in_bounds(gx, gy)) return false;
  long long lx = gx - ox, ly = gy - oy;
  return (bits[size_t(ly * words_per_row() + (lx >> 6))] >> (lx & 63)) & 1;
}

void GridRegion::set(long long gx, long long gy, bool v) {
  if (!in_bounds(gx, gy)) fail(Errc::bad_argument, "set() outside region frame");
  long long lx = gx - ox, ly = gy - oy;
  uint64_t& word = bits[size_t(ly * words_per_row() + (lx >> 6))];
  if (v)
    word |= 1ull << (lx & 63);
  else
    word &= ~(1ull << (lx & 63));
}

long long GridRegion::count() const {
  long long c = 0;
  for (uint64_t word : bits) c += std::popcount(word);
  return c;
}

std::optional<GridRegion::Box> GridRegion::occupied_box() const {
  long long x0 = w, x1 = -1, y0 = h, y1 = -1;
  long long wpr = words_per_row();
  for (long long y = 0; y < h; ++y) {
    const uint64_t* r = row(y);
    for (long long wi = 0; wi < wpr; ++wi) {
      uint64_t word = r[wi];
      if (!word) continue;
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
      long long lo = (wi << 6) + std::countr_zero(word);
      long long hi = (wi << 6) + 63 - std::countl_zero(word);
      x0 = std::min(x0, lo);
      x1 = std::max(x1, hi);
    }
  }
  if (x1 < 0) return std::nullopt;
  return Box{ox + x0, oy + y0, ox + x1 + 1, oy + y1 + 1};
}

void GridRegion::point_cell(Point p, long long& gx, long long& gy) const {
  gx = (long long)std::floor(p.x * m);
  gy = (long long)std::floor(p.y * m);
}

void GridRegion::trim() {
  auto box = occupied_box();
  if (!box) {
    ox = oy = 0;
    w = h = 0;
    bits.clear();
    return;
  }
  GridRegion t = from_extent(m, box->x0, box->y0, box->width(), box->height());
  for (long long gy = box->y0; gy < box->y1; ++gy)
    for (long long gx = box->x0; gx < box->x1; ++gx)
      if (get(gx, gy)) t.set(gx, gy);
  *this = std::move(t);
}

bool GridRegion::operator==(const GridRegion& o) const {
  return m == o.m && ox == o.ox && oy == o.oy && w == o.w && h == o.h && bits == o.bits;
}

GridRegion translate(const GridRegion& r, LatticeVector v) {
  GridRegion out = r;
  out.ox += v.p * r.m;
  out.oy += v.q * r.m;
  return out;
}

long long required_window(const GridRegion& r) {
  auto box = r.occupied_box();
  if (!box) return 1;
  double wx = double(box->width()) / r.m;
  double wy = double(box->height()) / r.m;
  return (long long)std::ceil(std::max(wx, wy)) + 1;
}

namespace {

// does a ∩ (b + s cells) contain a cell? optional witness (first in scan order)
bool shifted_intersect(const GridRegion& a, const GridRegion& b, long long sx, long long sy,
                       long long* wit_gx = nullptr, long long* wit_gy = nullptr) {
  long long y0 = std::max(a.oy, b.oy + sy);
  long long y1 = std::min(a.oy + a.h, b.oy + b.h + sy);
  long long x0 = std::max(a.ox, b.ox + sx);
  long long x1 = std::min(a.ox + a.w, b.ox + b.w + sx);
  if (y0 >= y1 || x0 >= x1) return false;
  const auto& K = simd::active_kernels();
  long long j0 = x0 - a.ox, j1 = x1 - a.ox;
  long long shift = b.ox + sx - a.ox; // a bit j corresponds to b bit j - shift
  for (long long gy = y0; gy < y1; ++gy) {
    const uint64_t* ra = a.row(gy - a.oy);
    const uint64_t* rb = b.row(gy - sy - b.oy);
    if (!K.row_shifted_and_any(ra, rb, b.words_per_row(), shift, j0, j1)) continue;
    if (wit_gx) {
      for (long long j = j0; j < j1; ++j) {
        bool av = (ra[j >> 6] >> (j & 63)) & 1;
        long long jb = j - shift;
        bool bv = jb >= 0 && jb < b.w && ((rb[jb >> 6] >> (jb & 63)) & 1);
        if (av && bv) {
          *wit_gx = a.ox + j;
          *wit_gy = gy;
          break;
        }
      }
    }
    return true;
  }
  return false;
}

void mask_row_padding(GridRegion& r) {
  int rem = int(r.w & 63);
  if (rem == 0 || r.bits.empty()) return;
  uint64_t mask = ~0ull >> (64 - rem);
  long long wpr = r.words_per_row();
  for (long long y = 0; y < r.h; ++y) r.row(y)[wpr - 1] &= mask;
}

GridRegion chebyshev_dilate_once(const GridRegion& r) {
  GridRegion out = GridRegion::from_extent(r.m, r.ox - 1, r.oy - 1, r.w + 2, r.h + 2);
  const auto& K = simd::active_kernels();
  long long wpr_in = r.words_per_row();
  long long wpr_out = out.words_per_row();
  // rows of `out` correspond to input rows shifted by one cell; the input
  // row is re-packed with a one-bit offset first
  std::vector<uint64_t> up(wpr_out, 0), mid(wpr_out, 0), dn(wpr_out, 0);
  auto pack = [&](long long in_y, std::vector<uint64_t>& dst) {
    std::fill(dst.begin(), dst.end(), 0);
    if (in_y < 0 || in_y >= r.h) return;
    const uint64_t* src = r.row(in_y);
    // input bit j -> output bit j+1
    uint64_t carry = 0;
    for (long long wi = 0; wi < wpr_in; ++wi) {
      dst[wi] = (src[wi] << 1) | carry;
      carry = src[wi] >> 63;
    }
    if (wpr_in < wpr_out) dst[wpr_in] = carry;
  };
  for (long long oy2 = 0; oy2 < out.h; ++oy2) {
    long long in_y = oy2 - 1;
    pack(in_y - 1, up);
    pack(in_y, mid);
    pack(in_y + 1, dn);
    K.dilate3_row(up.data(), mid.data(), dn.data(), out.row(oy2), wpr_out);
  }
  mask_row_padding(out);
  return out;
}

} // namespace

DisjointnessCertificate disjoint_from_translates(const GridRegion& r, long long window, int gap) {
  DisjointnessCertificate cert;
  cert.window = window;
  cert.gap = gap;
  auto box = r.occupied_box();
  if (!box) return cert;
  if (window < required_window(r))
    fail(Errc::window_too_small, "translate window does not dominate the bounding box");
  GridRegion probe = r;
  for (int i = 0; i < gap; ++i) probe = chebyshev_dilate_once(probe);
  for (LatticeVector v : window_vectors_spiral(window)) {
    long long gx, gy;
    if (shifted_intersect(probe, r, v.p * r.m, v.q * r.m, &gx, &gy)) {
      cert.disjoint = false;
      cert.witness = v;
      cert.witness_gx = gx;
      cert.witness_gy = gy;
      return cert;
    }
  }
  return cert;
}

GridRegion tube(const Polyline& arc, double radius, int m) {
  check_m(m);
  if (!arc.valid()) fail(Errc::bad_argument, "invalid polyline (repeated or non-finite points)");
  if (!(radius > 0)) fail(Errc::radius_too_small, "tube radius must be positive");
  if (radius < 2.0 / m) fail(Errc::radius_too_small, "tube radius below two grid cells");
  Point lo, hi;
  arc.bbox(lo, hi);
  long long gx0 = (long long)std::floor((lo.x - radius) * m) - 1;
  long long gy0 = (long long)std::floor((lo.y - radius) * m) - 1;
  long long gx1 = (long long)std::ceil((hi.x + radius) * m) + 1;
  long long gy1 = (long long)std::ceil((hi.y + radius) * m) + 1;
  GridRegion out = GridRegion::from_extent(m, gx0, gy0, gx1 - gx0, gy1 - gy0);
  const auto& K = simd::active_kernels();
  double h = 1.0 / m;
  double x0 = double(out.ox) * h;
  double r2 = radius * radius;
  for (size_t i = 0; i < arc.segment_count(); ++i) {
    Point a = arc.seg_a(i), b = arc.seg_b(i);
    long long sy0 = (long long)std::floor((std::min(a.y, b.y) - radius) * m) - 1;
    long long sy1 = (long long)std::ceil((std::max(a.y, b.y) + radius) * m) + 1;
    long long sx0 = (long long)std::floor((std::min(a.x, b.x) - radius) * m) - 1;
    long long sx1 = (long long)std::ceil((std::max(a.x, b.x) + radius) * m) + 1;
    sy0 = std::max(sy0, out.oy);
    sy1 = std::min(sy1, out.oy + out.h);
    long long j0 = std::max(sx0 - out.ox, 0ll);
    long long j1 = std::min(sx1 - out.ox, out.w);
    for (long long gy = sy0; gy < sy1; ++gy) {
      double cy = (double(gy) + 0.5) * h;
      K.stamp_segment_row(out.row(gy - out.oy), j0, j1, x0, h, cy, a.x, a.y, b.x, b.y, r2);
    }
  }
  mask_row_padding(out);
  out.trim();
  return out;
}

namespace {

// BFS over the complement of `r` within a frame padded by one cell, starting
// from the frame border; 8-connectivity. Returns the visited mask (local to
// the padded frame) plus frame geometry.
struct ComplementFlood {
  long long fx0, fy0, fw, fh;
  std::vector<uint8_t> outside; // 1 = reachable from border through complement
  long long complement_cells = 0;
  long long visited = 0;
};

ComplementFlood flood_complement(const GridRegion& r, const GridRegion::Box& box) {
  ComplementFlood f;
  f.fx0 = box.x0 - 1;
  f.fy0 = box.y0 - 1;
  f.fw = box.width() + 2;
  f.fh = box.height() + 2;
  f.outside.assign(size_t(f.fw * f.fh), 0);
  auto occupied = [&](long long lx, long long ly) { return r.get(f.fx0 + lx, f.fy0 + ly); };
  std::deque<std::pair<long long, long long>> queue;
  auto push = [&](long long lx, long long ly) {
    if (lx < 0 || ly < 0 || lx >= f.fw || ly >= f.fh) return;
    size_t idx = size_t(ly * f.fw + lx);
    if (f.outside[idx] || occupied(lx, ly)) return;
    f.outside[idx] = 1;
    ++f.visited;
    queue.emplace_back(lx, ly);
  };
  for (long long lx = 0; lx < f.fw; ++lx) {
    push(lx, 0);
    push(lx, f.fh - 1);
  }
  for (long long ly = 0; ly < f.fh; ++ly) {
    push(0, ly);
    push(f.fw - 1, ly);
  }
  while (!queue.empty()) {
    auto [lx, ly] = queue.front();
    queue.pop_front();
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx)
        if (dx || dy) push(lx + dx, ly + dy);
  }
  long long occ = 0;
  for (long long ly = 0; ly < f.fh; ++ly)
    for (long long lx = 0; lx < f.fw; ++lx)
      if (occupied(lx, ly)) ++occ;
  f.complement_cells = f.fw * f.fh - occ;
  return f;
}

} // namespace

GridRegion fill_holes(const GridRegion& r) {
  auto box = r.occupied_box();
  if (!box) return r;
  ComplementFlood f = flood_complement(r, *box);
  GridRegion out = GridRegion::from_extent(r.m, box->x0, box->y0, box->width(), box->height());
  for (long long ly = 1; ly < f.fh - 1; ++ly)
    for (long long lx = 1; lx < f.fw - 1; ++lx) {
      long long gx = f.fx0 + lx, gy = f.fy0 + ly;
      bool occ = r.get(gx, gy);
      bool hole = !occ && !f.outside[size_t(ly * f.fw + lx)];
      if (occ || hole) out.set(gx, gy);
    }
  return out;
}

bool grid_connected(const GridRegion& r) {
  auto box = r.occupied_box();
  if (!box) return false;
  long long total = r.count();
  // BFS from the first occupied cell, 4-connectivity
  long long sx = -1, sy = -1;
  for (long long gy = box->y0; gy < box->y1 && sx < 0; ++gy)
    for (long long gx = box->x0; gx < box->x1; ++gx)
      if (r.get(gx, gy)) {
        sx = gx;
        sy = gy;
        break;
      }
  long long fw = box->width(), fh = box->height();
  std::vector<uint8_t> seen(size_t(fw * fh), 0);
  std::deque<std::pair<long long, long long>> queue;
  auto push = [&](long long gx, long long gy) {
    if (gx < box->x0 || gy < box->y0 || gx >= box->x1 || gy >= box->y1) return;
    size_t idx = size_t((gy - box->y0) * fw + (gx - box->x0));
    if (seen[idx] || !r.get(gx, gy)) return;
    seen[idx] = 1;
    queue.emplace_back(gx, gy);
  };
  push(sx, sy);
  long long reached = 0;
  while (!queue.empty()) {
    auto [gx, gy] = queue.front();
    queue.pop_front();
    ++reached;
    push(gx + 1, gy);
    push(gx - 1, gy);
    push(gx, gy + 1);
    push(gx, gy - 1);
  }
  return reached == total;
}

bool simply_connected_certificate(const GridRegion& r) {
  auto box = r.occupied_box();
  if (!box) fail(Errc::empty_region, "simply-connected certificate of an empty region");
  if (!grid_connected(r)) return false;
  ComplementFlood f = flood_complement(r, *box);
  return f.visited == f.complement_cells;
}

std::vector<double> distance_transform_sq(const GridRegion& r, long long pad, long long& fw,
                                          long long& fh) {
  constexpr double INF = 1e30;
  fw = r.w + 2 * pad;
  fh = r.h + 2 * pad;
  std::vector<double> g(size_t(fw * fh), INF);
  // vertical pass: linear distance to nearest occupied cell in the column
  for (long long x = 0; x < fw; ++x) {
    double d = INF;
    for (long long y = 0; y < fh; ++y) {
      bool occ = r.get(r.ox + x - pad, r.oy + y - pad);
      d = occ ? 0.0 : (d >= INF ? INF : d + 1.0);
      g[size_t(y * fw + x)] = d;
    }
    d = INF;
    for (long long y = fh - 1; y >= 0; --y) {
      size_t idx = size_t(y * fw + x);
      bool occ = r.get(r.ox + x - pad, r.oy + y - pad);
      d = occ ? 0.0 : (d >= INF ? INF : d + 1.0);
      g[idx] = std::min(g[idx], d);
    }
  }
  for (auto& v : g)
    if (v < INF) v = v * v;
  // horizontal pass: lower envelope of parabolas (Felzenszwalb-Huttenlocher).
  // INF is a finite sentinel, so the textbook recurrence needs no special
  // cases; empty rows just come out >= INF.
  std::vector<double> out(size_t(fw * fh), INF);
  std::vector<long long> hull(size_t(fw), 0);
  std::vector<double> bound(size_t(fw) + 1, 0.0);
  for (long long y = 0; y < fh; ++y) {
    const double* f = g.data() + y * fw;
    long long k = 0;
    hull[0] = 0;
    bound[0] = -INF;
    bound[1] = INF;
    for (long long q = 1; q < fw; ++q) {
      double s;
      for (;;) {
        long long p = hull[k];
        s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * double(q - p));
        if (s <= bound[k] && k > 0) {
          --k;
          continue;
        }
        break;
      }
      ++k;
      hull[k] = q;
      bound[k] = s;
      bound[k + 1] = INF;
    }
    long long k2 = 0;
    for (long long q = 0; q < fw; ++q) {
      while (bound[k2 + 1] < double(q)) ++k2;
      long long p = hull[k2];
      double dq = double(q - p);
      out[size_t(y * fw + q)] = dq * dq + f[p];
    }
  }
  return out;
}

GridRegion dilate(const GridRegion& r, double radius_cells) {
  if (radius_cells <= 0) return r;
  auto box = r.occupied_box();
  if (!box) return r;
  long long pad = (long long)std::ceil(radius_cells) + 1;
  long long fw, fh;
  std::vector<double> d2 = distance_transform_sq(r, pad, fw, fh);
  GridRegion out = GridRegion::from_extent(r.m, r.ox - pad, r.oy - pad, fw, fh);
  double r2 = radius_cells * radius_cells;
  for (long long y = 0; y < fh; ++y)
    for (long long x = 0; x < fw; ++x)
      if (d2[size_t(y * fw + x)] <= r2) out.set(out.ox + x, out.oy + y);
  out.trim();
  return out;
}

double translate_clearance(const GridRegion& r, double cap_cells) {
  auto box = r.occupied_box();
  if (!box) return cap_cells;
  long long pad = (long long)std::ceil(cap_cells) + 1;
  long long fw, fh;
  std::vector<double> d2 = distance_transform_sq(r, pad, fw, fh);
  double best = cap_cells * cap_cells;
  long long vx_max = (box->width() + pad) / r.m + 1;
  long long vy_max = (box->height() + pad) / r.m + 1;
  for (long long vy = -vy_max; vy <= vy_max; ++vy) {
    for (long long vx = -vx_max; vx <= vx_max; ++vx) {
      if (vx == 0 && vy == 0) continue;
      long long sx = vx * r.m, sy = vy * r.m;
      // min over cells c of r of EDT(c - s); scan only where c - s lands in
      // the transform frame
      long long y0 = std::max(0ll, sy - pad), y1 = std::min(r.h, sy - pad + fh);
      long long x0 = std::max(0ll, sx - pad), x1 = std::min(r.w, sx - pad + fw);
      if (y0 >= y1 || x0 >= x1) continue;
      long long w0 = x0 >> 6, w1 = (x1 - 1) >> 6;
      for (long long y = y0; y < y1; ++y) {
        const uint64_t* row = r.row(y);
        long long ey = y - sy + pad;
        for (long long wi = w0; wi <= w1; ++wi) {
          uint64_t word = row[wi];
          if (wi == w0 && (x0 & 63)) word &= ~0ull << (x0 & 63);
          if (wi == w1 && (x1 & 63)) word &= ~0ull >> (64 - (x1 & 63));
          while (word) {
            int b = std::countr_zero(word);
            word &= word - 1;
            long long x = (wi << 6) + b;
            best = std::min(best, d2[size_t(ey * fw + (x - sx + pad))]);
          }
        }
      }
    }
  }
  return std::sqrt(best);
}

GridRegion rasterize_arc(const Polyline& arc, int m) {
  check_m(m);
  if (!arc.valid()) fail(Errc::bad_argument, "invalid polyline");
  Point lo, hi;
  arc.bbox(lo, hi);
  long long gx0 = (long long)std::floor(lo.x * m) - 1;
  long long gy0 = (long long)std::floor(lo.y * m) - 1;
  long long gx1 = (long long)std::ceil(hi.x * m) + 2;
  long long gy1 = (long long)std::ceil(hi.y * m) + 2;
  GridRegion out = GridRegion::from_extent(m, gx0, gy0, gx1 - gx0, gy1 - gy0);
  auto stamp = [&](long long gx, long long gy) {
    if (out.in_bounds(gx, gy)) out.set(gx, gy);
  };
  for (size_t i = 0; i < arc.segment_count(); ++i) {
    Point a = arc.seg_a(i), b = arc.seg_b(i);
    // grid traversal (Amanatides-Woo) in cell units
    double ax = a.x * m, ay = a.y * m, bx = b.x * m, by = b.y * m;
    long long cx = (long long)std::floor(ax), cy = (long long)std::floor(ay);
    long long ex = (long long)std::floor(bx), ey = (long long)std::floor(by);
    stamp(cx, cy);
    double dx = bx - ax, dy = by - ay;
    int sx = dx > 0 ? 1 : -1, sy = dy > 0 ? 1 : -1;
    double t_max_x = dx != 0 ? ((dx > 0 ? (cx + 1 - ax) : (ax - cx)) / std::abs(dx)) : HUGE_VAL;
    double t_max_y = dy != 0 ? ((dy > 0 ? (cy + 1 - ay) : (ay - cy)) / std::abs(dy)) : HUGE_VAL;
    double t_dx = dx != 0 ? 1.0 / std::abs(dx) : HUGE_VAL;
    double t_dy = dy != 0 ? 1.0 / std::abs(dy) : HUGE_VAL;
    long long guard = 4 * (std::llabs(ex - cx) + std::llabs(ey - cy)) + 8;
    while ((cx != ex || cy != ey) && guard-- > 0) {
      if (t_max_x < t_max_y) {
        cx += sx;
        t_max_x += t_dx;
      } else if (t_max_y < t_max_x) {
        cy += sy;
        t_max_y += t_dy;
      } else {
        // exact corner: take both neighbors to keep the cover conservative
        stamp(cx + sx, cy);
        stamp(cx, cy + sy);
        cx += sx;
        cy += sy;
        t_max_x += t_dx;
        t_max_y += t_dy;
      }
      stamp(cx, cy);
    }
    stamp(ex, ey);
  }
  out.trim();
  return out;
}

GridRegion region_union(const GridRegion& a, const GridRegion& b) {
  if (a.m != b.m) fail(Errc::bad_argument, "union of regions with different m");
  auto ba = a.occupied_box(), bb = b.occupied_box();
  if (!ba) return b;
  if (!bb) return a;
  long long x0 = std::min(ba->x0, bb->x0), y0 = std::min(ba->y0, bb->y0);
  long long x1 = std::max(ba->x1, bb->x1), y1 = std::max(ba->y1, bb->y1);
  GridRegion out = GridRegion::from_extent(a.m, x0, y0, x1 - x0, y1 - y0);
  auto blit = [&](const GridRegion& src) {
    auto box = src.occupied_box();
    for (long long gy = box->y0; gy < box->y1; ++gy)
      for (long long gx = box->x0; gx < box->x1; ++gx)
        if (src.get(gx, gy)) out.set(gx, gy);
  };
  blit(a);
  blit(b);
  return out;
}

bool regions_intersect(const GridRegion& a, const GridRegion& b) {
  if (a.m != b.m) fail(Errc::bad_argument, "intersect of regions with different m");
  return shifted_intersect(a, b, 0, 0);
}

bool region_subset(const GridRegion& a, const GridRegion& b) {
  if (a.m != b.m) fail(Errc::bad_argument, "subset of regions with different m");
  for (long long y = 0; y < a.h; ++y) {
    for (long long wi = 0; wi < a.words_per_row(); ++wi) {
      uint64_t word = a.row(y)[wi];
      while (word) {
        int bit = std::countr_zero(word);
        word &= word - 1;
        long long gx = a.ox + (wi << 6) + bit;
        long long gy = a.oy + y;
        if (!b.get(gx, gy)) return false;
      }
    }
  }
  return true;
}

GridRegion reduce_mod_lattice(const GridRegion& r) {
  GridRegion out = GridRegion::from_extent(r.m, 0, 0, r.m, r.m);
  for (long long y = 0; y < r.h; ++y) {
    for (long long wi = 0; wi < r.words_per_row(); ++wi) {
      uint64_t word = r.row(y)[wi];
      while (word) {
        int bit = std::countr_zero(word);
        word &= word - 1;
        long long gx = r.ox + (wi << 6) + bit;
        long long gy = r.oy + y;
        long long rx = ((gx % r.m) + r.m) % r.m;
        long long ry = ((gy % r.m) + r.m) % r.m;
        out.set(rx, ry);
      }
    }
  }
  return out;
}

double reduced_measure(const GridRegion& r) {
  return double(reduce_mod_lattice(r).count()) / (double(r.m) * double(r.m));
}

std::string save_gridregion(const GridRegion& r) {
  std::ostringstream os;
  os << "gridregion v1 m=" << r.m << " origin=" << r.ox << "," << r.oy << " size=" << r.w << "x"
     << r.h << "\n";
  for (long long y = 0; y < r.h; ++y) {
    long long x = 0;
    bool run_value = false; // zeros first
    bool first = true;
    while (x <= r.w) {
      long long start = x;
      while (x < r.w && r.get(r.ox + x, r.oy + y) == run_value) ++x;
      os << (first ? "" : " ") << (x - start);
      first = false;
      run_value = !run_value;
      if (x == r.w) break;
    }
    if (r.w == 0) os << 0;
    os << "\n";
  }
  return os.str();
}

GridRegion load_gridregion(const std::string& text) {
  std::istringstream is(text);
  std::string tag, ver;
  is >> tag >> ver;
  if (tag != "gridregion" || ver != "v1") fail(Errc::io_error, "bad gridregion header");
  auto field = [&](const std::string& key) {
    std::string tok;
    if (!(is >> tok) || tok.rfind(key + "=", 0) != 0)
      fail(Errc::io_error, "bad gridregion header field " + key);
    return tok.substr(key.size() + 1);
  };
  int m = std::stoi(field("m"));
  std::string org = field("origin");
  auto comma = org.find(',');
  if (comma == std::string::npos) fail(Errc::io_error, "bad origin");
  long long ox = std::stoll(org.substr(0, comma));
  long long oy = std::stoll(org.substr(comma + 1));
  std::string sz = field("size");
  auto cross = sz.find('x');
  if (cross == std::string::npos) fail(Errc::io_error, "bad size");
  long long w = std::stoll(sz.substr(0, cross));
  long long h = std::stoll(sz.substr(cross + 1));
  GridRegion r = GridRegion::from_extent(m, ox, oy, w, h);
  for (long long y = 0; y < h; ++y) {
    long long x = 0;
    bool run_value = false;
    while (x < w) {
      long long run;
      if (!(is >> run) || run < 0) fail(Errc::io_error, "bad run length");
      for (long long i = 0; i < run; ++i, ++x)
        if (run_value) r.set(ox + x, oy + y);
      run_value = !run_value;
      if (x > w) fail(Errc::io_error, "row overflow");
    }
    if (w == 0) {
      long long z;
      is >> z;
    }
  }
  return r;
}

} // namespace wildtorus
