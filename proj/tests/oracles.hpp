#pragma once
// Test-only reference implementations, kept independent of the library
// code paths they check.
#include <cmath>
#include <cstdint>
#include <vector>

#include "wildtorus/geometry.hpp"
#include "wildtorus/grid_region.hpp"

namespace wildtorus::oracle {

// brute-force translate disjointness on raw cells
inline bool region_translate_disjoint_brute(const GridRegion& r, long long window, int gap = 0) {
  std::vector<std::pair<long long, long long>> cells;
  for (long long gy = r.oy; gy < r.oy + r.h; ++gy)
    for (long long gx = r.ox; gx < r.ox + r.w; ++gx)
      if (r.get(gx, gy)) cells.emplace_back(gx, gy);
  for (long long vy = -window; vy <= window; ++vy)
    for (long long vx = -window; vx <= window; ++vx) {
      if (vx == 0 && vy == 0) continue;
      for (auto [ax, ay] : cells)
        for (auto [bx, by] : cells) {
          long long dx = std::llabs(ax - (bx + vx * r.m));
          long long dy = std::llabs(ay - (by + vy * r.m));
          if (std::max(dx, dy) <= gap) return false;
        }
    }
  return true;
}

// brute-force polyline translate disjointness via segment pairs
inline bool arc_translate_disjoint_brute(const Polyline& pl, long long window) {
  for (long long vy = -window; vy <= window; ++vy)
    for (long long vx = -window; vx <= window; ++vx) {
      if (vx == 0 && vy == 0) continue;
      Point off{double(vx), double(vy)};
      for (size_t i = 0; i < pl.segment_count(); ++i)
        for (size_t j = 0; j < pl.segment_count(); ++j)
          if (segments_intersect(pl.seg_a(i) + off, pl.seg_b(i) + off, pl.seg_a(j), pl.seg_b(j)))
            return false;
    }
  return true;
}

// flood fill connectivity over occupied cells, 4-connectivity
inline bool region_connected_brute(const GridRegion& r) {
  std::vector<std::pair<long long, long long>> cells;
  for (long long gy = r.oy; gy < r.oy + r.h; ++gy)
    for (long long gx = r.ox; gx < r.ox + r.w; ++gx)
      if (r.get(gx, gy)) cells.emplace_back(gx, gy);
  if (cells.empty()) return false;
  std::vector<char> seen(cells.size(), 0);
  auto index_of = [&](long long gx, long long gy) -> int {
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].first == gx && cells[i].second == gy) return int(i);
    return -1;
  };
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    auto [gx, gy] = cells[size_t(stack.back())];
    stack.pop_back();
    const long long dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int j = index_of(gx + dx[k], gy + dy[k]);
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == cells.size();
}

// random blob region: union of a few random rectangles
inline GridRegion random_region(uint64_t& state, int m, int max_rects = 4) {
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  int rects = 1 + int(next() % uint64_t(max_rects));
  GridRegion r = GridRegion::from_extent(m, -(3 * m), -(3 * m), 6 * m, 6 * m);
  for (int i = 0; i < rects; ++i) {
    long long x0 = -2 * m + (long long)(next() % uint64_t(3 * m));
    long long y0 = -2 * m + (long long)(next() % uint64_t(3 * m));
    long long w = 1 + (long long)(next() % uint64_t(m));
    long long hgt = 1 + (long long)(next() % uint64_t(m));
    for (long long gy = y0; gy < y0 + hgt; ++gy)
      for (long long gx = x0; gx < x0 + w; ++gx) r.set(gx, gy);
  }
  r.trim();
  return r;
}

} // namespace wildtorus::oracle
