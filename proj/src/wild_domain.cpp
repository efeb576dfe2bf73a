#include "wildtorus/wild_domain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wildtorus/dynamics.hpp"

namespace fs = std::filesystem;

namespace wildtorus {

void WildDomainParams::validate() const {
  if (depth < 0) fail(Errc::bad_config, "depth must be >= 0");
  if (m < 64 || (m & (m - 1)) != 0) fail(Errc::bad_config, "m must be a power of two >= 64");
  if (!(r0 > 0)) fail(Errc::bad_config, "r0 must be positive");
  if (samples_per_unit < 64) fail(Errc::bad_config, "samples_per_unit must be >= 64");
}

bool WildDomain::all_pass() const {
  for (const auto& c : certificates)
    if (!c.pass()) return false;
  return !certificates.empty();
}

bool torus_point_in_closure(const GridRegion& reduced, Point torus_point) {
  int m = reduced.m;
  long long cx = (long long)std::floor(torus_point.x * m);
  long long cy = (long long)std::floor(torus_point.y * m);
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) {
      long long gx = ((cx + dx) % m + m) % m;
      long long gy = ((cy + dy) % m + m) % m;
      if (reduced.get(gx, gy)) return true;
    }
  return false;
}

double region_direction_gap(const GridRegion& region, Point base, double R) {
  std::vector<Point> far;
  for (long long y = 0; y < region.h; ++y)
    for (long long wi = 0; wi < region.words_per_row(); ++wi) {
      uint64_t word = region.row(y)[wi];
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        Point c = region.cell_center(region.ox + (wi << 6) + b, region.oy + y);
        if (norm(c - base) > R) far.push_back(c);
      }
    }
  if (far.empty()) return 2.0 * M_PI;
  return direction_coverage(far, base, R).max_gap;
}

namespace {

struct StageState {
  GridRegion region;
  uint64_t max_dense_checked = 0;
};

// smallest dense index whose point is not yet in the reduced closure
uint64_t next_uncovered(const DenseSequence& dense, const GridRegion& reduced) {
  for (uint64_t n = 1;; ++n) {
    if (!torus_point_in_closure(reduced, dense.at(n))) return n;
    if (n > (1ull << 40)) fail(Errc::certificate_failure, "dense scan ran away");
  }
}

// min distance in cells from a cover point to every nonzero translate of the
// region (capped)
double point_translate_clearance(const GridRegion& r, Point p, double cap_cells) {
  auto box = r.occupied_box();
  if (!box) return cap_cells;
  long long pad = (long long)std::ceil(cap_cells) + 1;
  long long fw, fh;
  std::vector<double> d2 = distance_transform_sq(r, pad, fw, fh);
  long long cx = (long long)std::floor(p.x * r.m);
  long long cy = (long long)std::floor(p.y * r.m);
  double best = cap_cells * cap_cells;
  long long vspan_x = (box->width() + pad) / r.m + 2;
  long long vspan_y = (box->height() + pad) / r.m + 2;
  for (long long vy = -vspan_y; vy <= vspan_y; ++vy)
    for (long long vx = -vspan_x; vx <= vspan_x; ++vx) {
      if (vx == 0 && vy == 0) continue;
      long long ex = cx - vx * r.m - r.ox + pad;
      long long ey = cy - vy * r.m - r.oy + pad;
      if (ex < 0 || ey < 0 || ex >= fw || ey >= fh) continue;
      best = std::min(best, d2[size_t(ey * fw + ex)]);
    }
  return std::sqrt(best);
}

StageCertificate certify_stage(int stage, const GridRegion& region, const GridRegion* prev,
                               uint64_t n_k, const DenseSequence& dense,
                               const WildDomainParams& params) {
  StageCertificate cert;
  cert.stage = stage;
  cert.dense_index = n_k;
  cert.window = required_window(region);
  cert.disjoint = disjoint_from_translates(region, cert.window, 1).disjoint;
  cert.simply_connected = simply_connected_certificate(region);
  cert.nested = prev ? region_subset(*prev, region) : true;
  GridRegion reduced = reduce_mod_lattice(region);
  cert.dense_closure = true;
  for (uint64_t j = 0; j < n_k; ++j)
    if (!torus_point_in_closure(reduced, dense.at(j))) {
      cert.dense_closure = false;
      break;
    }
  cert.measure = double(reduced.count()) / (double(region.m) * double(region.m));
  cert.direction_gap = region_direction_gap(region, dense.at(0), params.direction_radius);
  return cert;
}

} // namespace

WildDomain build_wild_domain(const WildDomainParams& params) {
  params.validate();
  WildDomain out;
  out.params = params;
  DenseSequence dense;
  LatticeEnumeration lattice;
  const int m = params.m;
  const double cell = 1.0 / m;
  const double r0_cells = params.r0 * m;
  const Point seed = dense.at(0);
  ArcParams arc_params;
  arc_params.samples_per_unit = params.samples_per_unit;

  GridRegion prev;

  for (int stage = 0; stage <= params.depth; ++stage) {
    uint64_t n_k;
    if (stage == 0) {
      n_k = 1;
    } else {
      n_k = next_uncovered(dense, reduce_mod_lattice(prev));
    }
    LatticeVector v_k = lattice.at(uint64_t(stage));
    Point target = dense.at(n_k) + to_point(v_k);

    ArcBranch branch;
    Polyline arc = simple_projecting_arc(seed, target, arc_params, branch);

    double r_sched = std::max(2.0, r0_cells * std::pow(0.5, stage));
    int detours = 0;

    if (stage > 0) {
      // Route the arc around every translate of the previous stage. Conflicts
      // are resolved against the union of all conflicting translates at once
      // (the finitely-many-translates argument), so two nearby translates
      // cannot ping-pong the arc between their collars. If no channel exists
      // at the preferred safety margin, the margin falls back geometrically;
      // the final clearance certificate prices whatever route was taken.
      double margin0 = 2.0 * r_sched + 2.0;
      double target_clear = point_translate_clearance(prev, target, margin0 + 4.0);
      if (target_clear < 3.0)
        fail(Errc::clearance_exhausted, "marked point too close to a translate; increase m");
      margin0 = std::min(margin0, target_clear - 2.0);

      Polyline base_arc = arc;
      bool routed = false;
      for (double margin = margin0; margin >= 1.0 && !routed; margin = std::floor(margin / 2.0)) {
        GridRegion collar = dilate(prev, margin + 2.0);
        GridRegion guard = dilate(prev, margin);
        long long wb = required_window(collar) + polyline_required_window(base_arc) + 1;
        long long max_idx = (2 * wb + 1) * (2 * wb + 1);
        LatticeEnumeration spiral;
        Polyline attempt = base_arc;
        std::vector<LatticeVector> cluster;
        int local_detours = 0;
        try {
          for (long long round = 0; round <= max_idx; ++round) {
            GridRegion arc_cells = rasterize_arc(attempt, m);
            bool grew = false;
            for (long long idx = 1; idx < max_idx; ++idx) {
              LatticeVector v = spiral.at(uint64_t(idx));
              if (std::find(cluster.begin(), cluster.end(), v) != cluster.end()) continue;
              if (!regions_intersect(arc_cells, translate(guard, v))) continue;
              cluster.push_back(v);
              grew = true;
            }
            if (!grew) {
              routed = true; // attempt is clear of every translate's guard
              break;
            }
            GridRegion obstacle_u = translate(prev, cluster[0]);
            GridRegion collar_u = translate(collar, cluster[0]);
            for (size_t i = 1; i < cluster.size(); ++i) {
              obstacle_u = region_union(obstacle_u, translate(prev, cluster[i]));
              collar_u = region_union(collar_u, translate(collar, cluster[i]));
            }
            attempt = detour_around(base_arc, obstacle_u, collar_u, margin);
            ++local_detours;
          }
        } catch (const Error& e) {
          if (e.code() != Errc::no_channel && e.code() != Errc::certificate_failure) throw;
          routed = false;
        }
        if (routed) {
          arc = attempt;
          detours = local_detours;
        }
      }
      if (!routed) fail(Errc::certificate_failure, "arc routing failed at every margin");
      auto arc_cert = polyline_translate_disjoint(arc, polyline_required_window(arc));
      if (!arc_cert.disjoint || !polyline_is_simple(arc))
        fail(Errc::certificate_failure, "routed arc failed the translate certificate");
    }

    GridRegion k_cells =
        stage == 0 ? rasterize_arc(arc, m) : region_union(prev, rasterize_arc(arc, m));
    double clearance = translate_clearance(k_cells, 4.0 * r0_cells + 8.0);
    double r_cells = std::min(r_sched, std::floor((clearance - 2.0) / 2.0));
    if (r_cells < 2.0)
      fail(Errc::clearance_exhausted, "certified clearance below two cells; increase m");

    GridRegion grown = tube(arc, r_cells * cell, m);
    if (stage > 0) grown = region_union(grown, dilate(prev, r_cells));
    GridRegion region = fill_holes(grown);

    StageCertificate cert =
        certify_stage(stage, region, stage > 0 ? &prev : nullptr, n_k, dense, params);
    cert.lattice_vector = v_k;
    cert.marked = target;
    cert.branch = branch;
    cert.detours = detours;
    cert.clearance_cells = clearance;
    cert.radius_cells = r_cells;
    long long mx, my;
    region.point_cell(target, mx, my);
    cert.marked_occupied = region.get(mx, my);

    out.stage_regions.push_back(region);
    out.arcs.push_back(arc);
    out.certificates.push_back(cert);
    prev = std::move(region);
  }
  return out;
}

double measure_report(const WildDomain& domain) {
  if (domain.stage_regions.empty()) return 0.0;
  return reduced_measure(domain.region());
}

// ---- persistence ----

namespace {

std::string arc_to_csv(const Polyline& arc) {
  std::ostringstream os;
  os.precision(17);
  for (const Point& p : arc.points) os << p.x << "," << p.y << "\n";
  return os.str();
}

Polyline arc_from_csv(std::istream& is) {
  Polyline pl;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) fail(Errc::io_error, "bad arc csv line");
    pl.points.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  return pl;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(Errc::io_error, "cannot write " + path.string());
  os << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(Errc::io_error, "cannot read " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

} // namespace

std::string certificate_report(const WildDomain& domain);

std::string certificate_report(const WildDomain& domain) {
  std::ostringstream os;
  os.precision(12);
  os << "wilddomain certificates depth=" << domain.params.depth << " m=" << domain.params.m
     << "\n";
  for (const auto& c : domain.certificates) {
    os << "stage=" << c.stage << " n=" << c.dense_index << " v=" << c.lattice_vector.p << ","
       << c.lattice_vector.q << " marked=" << c.marked.x << "," << c.marked.y
       << " branch=" << (c.branch == ArcBranch::straight ? "straight" : "formula")
       << " detours=" << c.detours << " clearance_cells=" << c.clearance_cells
       << " radius_cells=" << c.radius_cells << " window=" << c.window
       << " disjoint=" << (c.disjoint ? 1 : 0) << " simply_connected="
       << (c.simply_connected ? 1 : 0) << " marked_occupied=" << (c.marked_occupied ? 1 : 0)
       << " nested=" << (c.nested ? 1 : 0) << " dense_closure=" << (c.dense_closure ? 1 : 0)
       << " measure=" << c.measure << " direction_gap=" << c.direction_gap
       << " pass=" << (c.pass() ? 1 : 0) << "\n";
  }
  return os.str();
}

void save_wild_domain(const WildDomain& domain, const std::string& dir) {
  fs::create_directories(dir);
  std::ostringstream meta;
  meta << "depth=" << domain.params.depth << "\n"
       << "m=" << domain.params.m << "\n";
  meta.precision(17);
  meta << "r0=" << domain.params.r0 << "\n"
       << "samples_per_unit=" << domain.params.samples_per_unit << "\n"
       << "direction_radius=" << domain.params.direction_radius << "\n";
  write_file(fs::path(dir) / "params.txt", meta.str());
  for (size_t k = 0; k < domain.stage_regions.size(); ++k) {
    write_file(fs::path(dir) / ("region_stage_" + std::to_string(k) + ".grid"),
               save_gridregion(domain.stage_regions[k]));
    write_file(fs::path(dir) / ("arc_" + std::to_string(k) + ".csv"), arc_to_csv(domain.arcs[k]));
  }
  write_file(fs::path(dir) / "certificates.txt", certificate_report(domain));
  std::ostringstream marked;
  marked.precision(17);
  for (const auto& c : domain.certificates)
    marked << c.stage << " " << c.dense_index << " " << c.lattice_vector.p << " "
           << c.lattice_vector.q << " " << c.marked.x << " " << c.marked.y << " "
           << (c.branch == ArcBranch::straight ? "straight" : "formula") << " " << c.detours
           << " " << c.clearance_cells << " " << c.radius_cells << "\n";
  write_file(fs::path(dir) / "marked.txt", marked.str());
}

WildDomain load_wild_domain(const std::string& dir) {
  WildDomain out;
  {
    std::istringstream is(read_file(fs::path(dir) / "params.txt"));
    std::string line;
    while (std::getline(is, line)) {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq), val = line.substr(eq + 1);
      if (key == "depth") out.params.depth = std::stoi(val);
      else if (key == "m") out.params.m = std::stoi(val);
      else if (key == "r0") out.params.r0 = std::stod(val);
      else if (key == "samples_per_unit") out.params.samples_per_unit = std::stod(val);
      else if (key == "direction_radius") out.params.direction_radius = std::stod(val);
    }
  }
  DenseSequence dense;
  for (int k = 0; k <= out.params.depth; ++k) {
    out.stage_regions.push_back(
        load_gridregion(read_file(fs::path(dir) / ("region_stage_" + std::to_string(k) + ".grid"))));
    std::istringstream is(read_file(fs::path(dir) / ("arc_" + std::to_string(k) + ".csv")));
    out.arcs.push_back(arc_from_csv(is));
  }
  // recompute certificates from the marked table + regions
  std::istringstream ms(read_file(fs::path(dir) / "marked.txt"));
  std::string line;
  const GridRegion* prev = nullptr;
  int k = 0;
  while (std::getline(ms, line) && k <= out.params.depth) {
    std::istringstream ls(line);
    int stage;
    uint64_t n;
    long long vp, vq;
    double mx, my, clearance, radius;
    std::string branch;
    int detours;
    ls >> stage >> n >> vp >> vq >> mx >> my >> branch >> detours >> clearance >> radius;
    const GridRegion& region = out.stage_regions[size_t(k)];
    StageCertificate cert = certify_stage(stage, region, prev, n, dense, out.params);
    cert.lattice_vector = {vp, vq};
    cert.marked = {mx, my};
    cert.branch = branch == "straight" ? ArcBranch::straight : ArcBranch::formula;
    cert.detours = detours;
    cert.clearance_cells = clearance;
    cert.radius_cells = radius;
    long long cx, cy;
    region.point_cell(cert.marked, cx, cy);
    cert.marked_occupied = region.get(cx, cy);
    out.certificates.push_back(cert);
    prev = &out.stage_regions[size_t(k)];
    ++k;
  }
  return out;
}

} // namespace wildtorus
