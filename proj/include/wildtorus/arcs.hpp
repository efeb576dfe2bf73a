#pragma once
// Arc construction in the universal cover: simple arcs whose torus
// projection is injective (straight segment when possible, the reduced
// sine-bump arc otherwise), and grid-routed detours around obstacle
// regions.
#include "wildtorus/geometry.hpp"
#include "wildtorus/grid_region.hpp"

namespace wildtorus {

struct ArcParams {
  double samples_per_unit = 64.0; // lower bound on sampling density
  int max_retries = 3;            // sampling refinements before giving up
};

// Arc from xhat to yhat whose polyline passes the finite-window translate
// disjointness test. Throws SamePointOnTorus if yhat - xhat is an integer
// vector, CertificateFailure if refinement runs out.
Polyline simple_projecting_arc(Point xhat, Point yhat, const ArcParams& params = {});

// Did the construction take the straight-segment branch or the reduced
// formula branch? (exposed for tests and reports)
enum class ArcBranch { straight, formula };
Polyline simple_projecting_arc(Point xhat, Point yhat, const ArcParams& params, ArcBranch& branch);

// Reroute the arc between its first and last crossing of `collar` through
// collar \ dilate(obstacle, margin_cells), following 4-connected cell
// centers. The arc is unchanged outside the collar. Obstacle must be
// strictly contained in the collar. Arc endpoints may not lie in the
// obstacle.
Polyline detour_around(const Polyline& arc, const GridRegion& obstacle, const GridRegion& collar,
                       double margin_cells = 0.0);

// same, with the no-go zone given explicitly (obstacle ⊆ forbidden ⊆ collar
// up to the endpoint cells)
Polyline detour_around_zone(const Polyline& arc, const GridRegion& obstacle,
                            const GridRegion& collar, const GridRegion& forbidden);

} // namespace wildtorus
