#include "wildtorus/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace wildtorus {

namespace {

bool integer_vector(Point d) {
  return d.x == std::round(d.x) && d.y == std::round(d.y);
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Polyline sample_segment(Point a, Point b, double per_unit) {
  long long n = std::max<long long>(1, (long long)std::ceil(norm(b - a) * per_unit));
  Polyline pl;
  pl.points.reserve(size_t(n + 1));
  for (long long i = 0; i <= n; ++i) {
    double t = double(i) / double(n);
    pl.points.push_back(a + t * (b - a));
  }
  pl.points.front() = a;
  pl.points.back() = b;
  return pl;
}

// the explicit reduced arc: horizontal endpoints (alpha,c) -> (beta,c),
// height term (1/4)|sin(pi t (beta-alpha))| minus the linear correction
Polyline formula_arc(double alpha, double beta, double c, long long n) {
  Polyline pl;
  pl.points.reserve(size_t(n + 1));
  double span = beta - alpha;
  double end_term = 0.25 * std::abs(std::sin(M_PI * span));
  for (long long i = 0; i <= n; ++i) {
    double t = double(i) / double(n);
    double x = alpha + t * span;
    double y = c + 0.25 * std::abs(std::sin(M_PI * t * span)) - t * end_term;
    pl.points.push_back({x, y});
  }
  return pl;
}

void dedupe_consecutive(Polyline& pl) {
  auto last = std::unique(pl.points.begin(), pl.points.end(),
                          [](Point a, Point b) { return a == b; });
  pl.points.erase(last, pl.points.end());
}

} // namespace

Polyline simple_projecting_arc(Point xhat, Point yhat, const ArcParams& params) {
  ArcBranch branch;
  return simple_projecting_arc(xhat, yhat, params, branch);
}

Polyline simple_projecting_arc(Point xhat, Point yhat, const ArcParams& params, ArcBranch& branch) {
  Point d = yhat - xhat;
  if (integer_vector(d))
    fail(Errc::same_point_on_torus, "arc endpoints project to the same torus point");

  // straight segment first; exact test on the two-point polyline
  Polyline seg;
  seg.points = {xhat, yhat};
  auto seg_cert = polyline_translate_disjoint(seg, polyline_required_window(seg));
  if (seg_cert.disjoint) {
    branch = ArcBranch::straight;
    Polyline out = sample_segment(xhat, yhat, params.samples_per_unit);
    auto cert = polyline_translate_disjoint(out, polyline_required_window(out));
    if (!cert.disjoint) fail(Errc::certificate_failure, "sampled straight arc failed certificate");
    return out;
  }

  // the segment meets a translate of itself; reduce that translate to (1,0)
  branch = ArcBranch::formula;
  long long p = seg_cert.witness.p, q = seg_cert.witness.q;
  long long a, b;
  long long g = ext_gcd(p, q, a, b);
  p /= g;
  q /= g;
  a = 0;
  b = 0;
  ext_gcd(p, q, a, b); // a*p + b*q = 1
  UnimodularMap A{a, b, -q, p, {0, 0}};
  UnimodularMap Ainv = A.inverse();
  double frob = std::sqrt(double(Ainv.a * Ainv.a + Ainv.b * Ainv.b + Ainv.c * Ainv.c +
                                Ainv.d * Ainv.d));

  Point xr = apply_unimodular(xhat, A);
  Point yr = apply_unimodular(yhat, A);
  // A maps the segment direction to the horizontal axis
  bool reversed = yr.x < xr.x;
  double alpha = reversed ? yr.x : xr.x;
  double beta = reversed ? xr.x : yr.x;
  double c = xr.y; // yr.y equals xr.y up to rounding
  double span = beta - alpha;
  if (!(span > 0)) fail(Errc::certificate_failure, "degenerate reduced segment");

  double per_unit = params.samples_per_unit;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    long long n = std::max<long long>(8, (long long)std::ceil(2.0 * span * frob * per_unit));
    Polyline reduced = formula_arc(alpha, beta, c, n);
    Polyline out = apply_unimodular(reduced, Ainv);
    if (reversed) std::reverse(out.points.begin(), out.points.end());
    // endpoints exact by construction
    if (norm(out.points.front() - xhat) > 1e-8 || norm(out.points.back() - yhat) > 1e-8)
      fail(Errc::certificate_failure, "reduced arc endpoints drifted");
    out.points.front() = xhat;
    out.points.back() = yhat;
    dedupe_consecutive(out);
    if (out.points.size() >= 2 && polyline_is_simple(out)) {
      auto cert = polyline_translate_disjoint(out, polyline_required_window(out));
      if (cert.disjoint) return out;
    }
    per_unit *= 2.0;
  }
  fail(Errc::certificate_failure, "formula arc failed certificate after retries");
}

namespace {

struct CellRef {
  long long gx, gy;
};

// ordered cells a segment passes through (Amanatides-Woo)
std::vector<CellRef> segment_cells(Point a, Point b, int m) {
  std::vector<CellRef> cells;
  double ax = a.x * m, ay = a.y * m, bx = b.x * m, by = b.y * m;
  long long cx = (long long)std::floor(ax), cy = (long long)std::floor(ay);
  long long ex = (long long)std::floor(bx), ey = (long long)std::floor(by);
  cells.push_back({cx, cy});
  double dx = bx - ax, dy = by - ay;
  int sx = dx > 0 ? 1 : -1, sy = dy > 0 ? 1 : -1;
  double t_max_x = dx != 0 ? ((dx > 0 ? (cx + 1 - ax) : (ax - cx)) / std::abs(dx)) : HUGE_VAL;
  double t_max_y = dy != 0 ? ((dy > 0 ? (cy + 1 - ay) : (ay - cy)) / std::abs(dy)) : HUGE_VAL;
  double t_dx = dx != 0 ? 1.0 / std::abs(dx) : HUGE_VAL;
  double t_dy = dy != 0 ? 1.0 / std::abs(dy) : HUGE_VAL;
  long long guard = 4 * (std::llabs(ex - cx) + std::llabs(ey - cy)) + 8;
  while ((cx != ex || cy != ey) && guard-- > 0) {
    if (t_max_x <= t_max_y) {
      cx += sx;
      t_max_x += t_dx;
    } else {
      cy += sy;
      t_max_y += t_dy;
    }
    cells.push_back({cx, cy});
  }
  return cells;
}

// first/last collar-crossing segment indices
struct CollarCrossing {
  bool any = false;
  size_t first_seg = 0, last_seg = 0;
};

CollarCrossing find_crossings(const Polyline& arc, const GridRegion& collar) {
  CollarCrossing cc;
  for (size_t i = 0; i < arc.segment_count(); ++i) {
    bool hit = false;
    for (const CellRef& c : segment_cells(arc.seg_a(i), arc.seg_b(i), collar.m))
      if (collar.get(c.gx, c.gy)) {
        hit = true;
        break;
      }
    if (!hit) continue;
    if (!cc.any) {
      cc.any = true;
      cc.first_seg = i;
    }
    cc.last_seg = i;
  }
  return cc;
}

} // namespace

Polyline detour_around(const Polyline& arc, const GridRegion& obstacle, const GridRegion& collar,
                       double margin_cells) {
  GridRegion forbidden = margin_cells > 0 ? dilate(obstacle, margin_cells) : obstacle;
  return detour_around_zone(arc, obstacle, collar, forbidden);
}

Polyline detour_around_zone(const Polyline& arc, const GridRegion& obstacle,
                            const GridRegion& collar, const GridRegion& forbidden) {
  if (obstacle.m != collar.m || forbidden.m != collar.m)
    fail(Errc::bad_argument, "obstacle/collar grid mismatch");
  if (!region_subset(obstacle, collar) || obstacle.count() >= collar.count())
    fail(Errc::bad_argument, "collar must strictly contain the obstacle");
  int m = collar.m;

  CollarCrossing cc = find_crossings(arc, collar);
  if (!cc.any) return arc;

  auto cell_of = [&](Point p) {
    long long gx, gy;
    collar.point_cell(p, gx, gy);
    return CellRef{gx, gy};
  };
  CellRef front_cell = cell_of(arc.points.front());
  CellRef back_cell = cell_of(arc.points.back());
  if (obstacle.get(front_cell.gx, front_cell.gy) || obstacle.get(back_cell.gx, back_cell.gy))
    fail(Errc::bad_argument, "arc endpoint inside the obstacle");

  // Endpoint cells stay routable even inside the safety margin; the caller's
  // clearance certificates bound how close the final arc may sit.
  auto is_endpoint_cell = [&](long long gx, long long gy) {
    return (gx == front_cell.gx && gy == front_cell.gy) ||
           (gx == back_cell.gx && gy == back_cell.gy);
  };
  auto routable = [&](long long gx, long long gy) {
    if (!collar.get(gx, gy)) return false;
    return !forbidden.get(gx, gy) || is_endpoint_cell(gx, gy);
  };

  // entry cell: first routable collar cell along the first crossing segment
  auto entry_cells = segment_cells(arc.seg_a(cc.first_seg), arc.seg_b(cc.first_seg), m);
  CellRef start{0, 0};
  bool found = false;
  for (const CellRef& c : entry_cells)
    if (routable(c.gx, c.gy)) {
      start = c;
      found = true;
      break;
    }
  if (!found) fail(Errc::no_channel, "collar entry is blocked");
  auto exit_cells = segment_cells(arc.seg_a(cc.last_seg), arc.seg_b(cc.last_seg), m);
  CellRef goal{0, 0};
  found = false;
  for (auto it = exit_cells.rbegin(); it != exit_cells.rend(); ++it)
    if (routable(it->gx, it->gy)) {
      goal = *it;
      found = true;
      break;
    }
  if (!found) fail(Errc::no_channel, "collar exit is blocked");

  // BFS over collar \ forbidden, 4-connectivity, deterministic E/N/W/S order
  auto box = collar.occupied_box();
  long long fw = box->width(), fh = box->height();
  auto idx_of = [&](long long gx, long long gy) {
    return size_t((gy - box->y0) * fw + (gx - box->x0));
  };
  std::vector<int32_t> parent(size_t(fw * fh), -2); // -2 unvisited, -1 root
  std::deque<CellRef> queue;
  parent[idx_of(start.gx, start.gy)] = -1;
  queue.push_back(start);
  const int dxs[4] = {1, 0, -1, 0};
  const int dys[4] = {0, 1, 0, -1};
  bool reached = false;
  while (!queue.empty() && !reached) {
    CellRef c = queue.front();
    queue.pop_front();
    for (int k = 0; k < 4; ++k) {
      long long nx = c.gx + dxs[k], ny = c.gy + dys[k];
      if (nx < box->x0 || ny < box->y0 || nx >= box->x1 || ny >= box->y1) continue;
      size_t ni = idx_of(nx, ny);
      if (parent[ni] != -2 || !routable(nx, ny)) continue;
      parent[ni] = int32_t(idx_of(c.gx, c.gy));
      if (nx == goal.gx && ny == goal.gy) {
        reached = true;
        break;
      }
      queue.push_back({nx, ny});
    }
  }
  if (!(start.gx == goal.gx && start.gy == goal.gy) && !reached)
    fail(Errc::no_channel, "no path through collar around obstacle");

  // reconstruct goal -> start, then reverse
  std::vector<CellRef> path;
  {
    long long gx = goal.gx, gy = goal.gy;
    for (;;) {
      path.push_back({gx, gy});
      int32_t p = parent[idx_of(gx, gy)];
      if (p < 0) break;
      gx = box->x0 + (p % fw);
      gy = box->y0 + (p / fw);
    }
    std::reverse(path.begin(), path.end());
  }

  // collapse straight runs of cell centers
  std::vector<Point> mid;
  for (size_t i = 0; i < path.size(); ++i) {
    Point p = collar.cell_center(path[i].gx, path[i].gy);
    if (mid.size() >= 2) {
      Point d1 = mid.back() - mid[mid.size() - 2];
      Point d2 = p - mid.back();
      if (cross(d1, d2) == 0 && dot(d1, d2) > 0) {
        mid.back() = p;
        continue;
      }
    }
    mid.push_back(p);
  }

  Polyline out;
  out.points.assign(arc.points.begin(), arc.points.begin() + long(cc.first_seg) + 1);
  for (Point p : mid) out.points.push_back(p);
  for (size_t i = cc.last_seg + 1; i < arc.points.size(); ++i) out.points.push_back(arc.points[i]);
  dedupe_consecutive(out);

  // the replacement must avoid the obstacle outright
  if (regions_intersect(rasterize_arc(out, m), obstacle))
    fail(Errc::certificate_failure, "detour still touches the obstacle");
  return out;
}

} // namespace wildtorus
