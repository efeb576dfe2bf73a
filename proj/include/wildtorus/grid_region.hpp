#pragma once
// Occupancy bitmap over a scaled integer grid: the computational stand-in
// for bounded open subsets of the plane. Cell size is 1/m with m a power of
// two, so integer translates of the lattice move cells to cells exactly.
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildtorus/geometry.hpp"

namespace wildtorus {

struct GridRegion {
  int m = 256;          // cells per unit length; cell_size = 1/m
  long long ox = 0;     // global grid coords of bitmap cell (0,0)
  long long oy = 0;
  long long w = 0;      // bitmap extent in cells
  long long h = 0;
  std::vector<uint64_t> bits; // row-major, words_per_row() per row, LSB first

  double cell_size() const { return 1.0 / m; }
  long long words_per_row() const { return (w + 63) / 64; }

  static GridRegion empty(int m);
  static GridRegion from_extent(int m, long long ox, long long oy, long long w, long long h);

  bool in_bounds(long long gx, long long gy) const {
    return gx >= ox && gx < ox + w && gy >= oy && gy < oy + h;
  }
  // global grid coordinates
  bool get(long long gx, long long gy) const;
  void set(long long gx, long long gy, bool v = true);

  uint64_t* row(long long local_y) { return bits.data() + local_y * words_per_row(); }
  const uint64_t* row(long long local_y) const { return bits.data() + local_y * words_per_row(); }

  long long count() const;
  bool empty_region() const { return count() == 0; }

  // tight bounding box of occupied cells in global grid coords; nullopt if empty
  struct Box {
    long long x0, y0, x1, y1; // half-open
    long long width() const { return x1 - x0; }
    long long height() const { return y1 - y0; }
  };
  std::optional<Box> occupied_box() const;

  // cell center in cover units
  Point cell_center(long long gx, long long gy) const {
    return {(double(gx) + 0.5) / m, (double(gy) + 0.5) / m};
  }
  // cell containing a cover point
  void point_cell(Point p, long long& gx, long long& gy) const;

  // shrink storage to the occupied bounding box (plus nothing); empty -> 0x0
  void trim();

  bool operator==(const GridRegion& o) const;
};

// exact shift by v (whole units): origin moves by m*v, content bit-for-bit
GridRegion translate(const GridRegion& r, LatticeVector v);

// smallest window certified complete for this region (per-axis extent + 1)
long long required_window(const GridRegion& r);

struct DisjointnessCertificate {
  bool disjoint = true;
  long long window = 0;
  int gap = 0;
  LatticeVector witness{0, 0};
  long long witness_gx = 0, witness_gy = 0; // overlapping cell (global coords)
};

// Certifies region ∩ (region+v) = ∅ for all nonzero |v|_∞ <= window.
// gap > 0 strengthens to "no cell of region+v within Chebyshev distance gap
// of the region". Throws WindowTooSmall if the window does not dominate the
// bounding box. Empty regions are trivially disjoint.
DisjointnessCertificate disjoint_from_translates(const GridRegion& r, long long window, int gap = 0);

// cells whose center is within `radius` (cover units) of some arc segment
GridRegion tube(const Polyline& arc, double radius, int m);

// region ∪ bounded components of its complement (8-connectivity complement)
GridRegion fill_holes(const GridRegion& r);

// region 4-connected and padded complement 8-connected
bool simply_connected_certificate(const GridRegion& r);

// 4-connectivity flood-fill reachability count from the first occupied cell
bool grid_connected(const GridRegion& r);

// Exact squared Euclidean distance transform (in cells, center metric) of
// the occupied set over the bitmap frame padded by `pad` cells. Output frame
// origin is (ox-pad, oy-pad), extent (w+2pad) x (h+2pad); row-major doubles.
// Unoccupied frames full of +inf.
std::vector<double> distance_transform_sq(const GridRegion& r, long long pad,
                                          long long& fw, long long& fh);

// cells within dist <= radius_cells of an occupied cell (center metric)
GridRegion dilate(const GridRegion& r, double radius_cells);

// Min center distance (cells) between region and region+v over nonzero v,
// capped: only translates that could come within cap_cells are examined;
// returns cap_cells if none do.
double translate_clearance(const GridRegion& r, double cap_cells);

// cells of the supercover of the arc (every cell the polyline passes through)
GridRegion rasterize_arc(const Polyline& arc, int m);

// union (bitmaps may have different origins/extents; same m required)
GridRegion region_union(const GridRegion& a, const GridRegion& b);
// does a ∩ b contain any cell?
bool regions_intersect(const GridRegion& a, const GridRegion& b);
// a ⊆ b
bool region_subset(const GridRegion& a, const GridRegion& b);

// fraction of the m x m torus fundamental domain covered by cells mod m
double reduced_measure(const GridRegion& r);
// occupancy bitmap reduced mod m (m x m, origin 0,0)
GridRegion reduce_mod_lattice(const GridRegion& r);

// text format: `gridregion v1 m=<int> origin=<int>,<int> size=<int>x<int>`
// then h rows of run-length-encoded bits (alternating zero/one run lengths,
// zeros first). Bit-exact round trip.
std::string save_gridregion(const GridRegion& r);
GridRegion load_gridregion(const std::string& text);

} // namespace wildtorus
