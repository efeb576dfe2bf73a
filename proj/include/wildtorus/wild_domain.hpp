#pragma once
// The recursive construction of the wild simply-connected domain: dense
// points joined to the seed by arcs routed around every translate of the
// previous stage, thickened, hole-filled, and certified stage by stage.
#include <string>
#include <vector>

#include "wildtorus/arcs.hpp"
#include "wildtorus/enumerations.hpp"
#include "wildtorus/grid_region.hpp"

namespace wildtorus {

struct WildDomainParams {
  int depth = 8;       // K: stages 0..K
  int m = 256;         // grid resolution (power of two, >= 64)
  double r0 = 1.0 / 16.0; // tube radius schedule base, in units
  double samples_per_unit = 64.0;
  double direction_radius = 2.0; // R for the per-stage direction gap record

  void validate() const;
};

struct StageCertificate {
  int stage = 0;
  uint64_t dense_index = 0;       // n_k
  LatticeVector lattice_vector{0, 0}; // v_k
  Point marked{0, 0};             // x̂_{n_k} + v_k
  ArcBranch branch = ArcBranch::straight;
  int detours = 0;
  double clearance_cells = 0;     // certified clearance of cl(U_k) ∪ γ before thickening
  double radius_cells = 0;        // tube radius used, in cells
  long long window = 0;
  bool disjoint = false;          // translate disjointness with >= 1-cell gap
  bool simply_connected = false;
  bool marked_occupied = false;   // marked point cell occupied in this stage
  bool nested = false;            // previous stage contained in this stage
  bool dense_closure = false;     // x_j in cl π(U_k) for all j < n_k
  double measure = 0;             // reduced measure of this stage
  double direction_gap = 0;       // max angular gap beyond direction_radius (2pi if none)

  bool pass() const {
    return disjoint && simply_connected && marked_occupied && nested && dense_closure;
  }
};

struct WildDomain {
  WildDomainParams params;
  std::vector<GridRegion> stage_regions; // U_0 .. U_K
  std::vector<Polyline> arcs;            // γ_0 .. γ_K
  std::vector<StageCertificate> certificates;

  const GridRegion& region() const { return stage_regions.back(); }
  bool all_pass() const;
};

WildDomain build_wild_domain(const WildDomainParams& params);

// fraction of the torus covered by the projected region
double measure_report(const WildDomain& domain);

// is the torus point covered by the reduced closure (cell or an 8-neighbor
// occupied, wrapping mod m)?
bool torus_point_in_closure(const GridRegion& reduced, Point torus_point);

// max angular gap of occupied-cell directions beyond radius R of base;
// returns 2*pi when no cell lies beyond R
double region_direction_gap(const GridRegion& region, Point base, double R);

// per-stage certificate table as a structured text report
std::string certificate_report(const WildDomain& domain);

void save_wild_domain(const WildDomain& domain, const std::string& dir);
WildDomain load_wild_domain(const std::string& dir);

} // namespace wildtorus
