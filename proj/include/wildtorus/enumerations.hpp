#pragma once
// Deterministic enumerations driving the recursive construction: a dense
// sequence of dyadic points in the fundamental square and a spiral
// enumeration of the integer lattice.
#include <cstdint>

#include "wildtorus/geometry.hpp"

namespace wildtorus {

// Dyadic points (i/2^s, j/2^s) enumerated by increasing level s, then
// lexicographically by (i, j), skipping points already seen at coarser
// levels. All points distinct; index 0 is (0,0).
struct DenseSequence {
  Point at(uint64_t index) const;
  // the first density_count(k) points are (1/k)-dense in the torus
  static uint64_t density_count(uint64_t k);
};

// Nonzero-start spiral over Z^2: (0,0), then each Chebyshev shell s >= 1
// walked counterclockwise from (s, 0). Bijective.
struct LatticeEnumeration {
  LatticeVector at(uint64_t index) const;
  uint64_t index_of(LatticeVector v) const;
};

} // namespace wildtorus
