#include "wildtorus/enumerations.hpp"

#include <cmath>

namespace wildtorus {

Point DenseSequence::at(uint64_t index) const {
  if (index == 0) return {0.0, 0.0};
  // find level s >= 1 with 4^{s-1} <= index < 4^s
  int s = 1;
  while (index >= (1ull << (2 * s))) ++s;
  uint64_t r = index - (1ull << (2 * (s - 1)));
  uint64_t half = 1ull << (s - 1);     // 2^{s-1}
  uint64_t per_pair = 3 * half;        // one even row (odd j only) + one odd row (all j)
  uint64_t pair = r / per_pair;
  uint64_t rem = r % per_pair;
  uint64_t i, j;
  if (rem < half) {
    i = 2 * pair;
    j = 2 * rem + 1;
  } else {
    i = 2 * pair + 1;
    j = rem - half;
  }
  double scale = 1.0 / double(1ull << s);
  return {double(i) * scale, double(j) * scale};
}

uint64_t DenseSequence::density_count(uint64_t k) {
  // smallest level s with half-diagonal sqrt(2)/2^{s+1} <= 1/k,
  // i.e. 2 * 4^s >= k^2
  int s = 0;
  while (2.0 * std::pow(4.0, s) < double(k) * double(k)) ++s;
  return 1ull << (2 * s);
}

LatticeVector LatticeEnumeration::at(uint64_t index) const {
  if (index == 0) return {0, 0};
  long long s = 1;
  while (uint64_t((2 * s + 1) * (2 * s + 1)) <= index) ++s;
  long long t = (long long)(index - uint64_t((2 * s - 1) * (2 * s - 1)));
  if (t < s) return {s, t};
  if (t < 3 * s) return {s - (t - s), s};
  if (t < 5 * s) return {-s, s - (t - 3 * s)};
  if (t < 7 * s) return {-s + (t - 5 * s), -s};
  return {s, -s + (t - 7 * s)};
}

uint64_t LatticeEnumeration::index_of(LatticeVector v) const {
  long long s = std::max(std::llabs(v.p), std::llabs(v.q));
  if (s == 0) return 0;
  uint64_t base = uint64_t((2 * s - 1) * (2 * s - 1));
  if (v.p == s && v.q >= 0 && v.q < s) return base + uint64_t(v.q);
  if (v.q == s) return base + uint64_t(s + (s - v.p));
  if (v.p == -s) return base + uint64_t(3 * s + (s - v.q));
  if (v.q == -s) return base + uint64_t(5 * s + (v.p + s));
  return base + uint64_t(7 * s + (v.q + s)); // v.p == s, v.q < 0
}

} // namespace wildtorus
