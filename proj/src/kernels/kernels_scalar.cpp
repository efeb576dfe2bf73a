#include "wildtorus/kernels.hpp"

namespace wildtorus::simd {

namespace {

// 64 consecutive bits of b starting at bit position pos (possibly negative);
// out-of-range bits read as zero
inline uint64_t gather_word(const uint64_t* b, long long b_words, long long pos) {
  long long w = pos >> 6; // arithmetic shift: floor division
  int s = int(pos - (w << 6));
  uint64_t lo = (w >= 0 && w < b_words) ? b[w] : 0;
  if (s == 0) return lo;
  uint64_t hi = (w + 1 >= 0 && w + 1 < b_words) ? b[w + 1] : 0;
  return (lo >> s) | (hi << (64 - s));
}

bool row_shifted_and_any_scalar(const uint64_t* a, const uint64_t* b, long long b_words,
                                long long shift, long long j0, long long j1) {
  if (j0 >= j1) return false;
  long long w0 = j0 >> 6, w1 = (j1 - 1) >> 6;
  for (long long w = w0; w <= w1; ++w) {
    uint64_t aw = a[w];
    if (w == w0) aw &= ~0ull << (j0 & 63);
    if (w == w1) {
      int r = int(j1 - (w << 6));
      if (r < 64) aw &= ~0ull >> (64 - r);
    }
    if (!aw) continue;
    if (aw & gather_word(b, b_words, (w << 6) - shift)) return true;
  }
  return false;
}

inline uint64_t merged(const uint64_t* up, const uint64_t* mid, const uint64_t* down,
                       long long n, long long i) {
  if (i < 0 || i >= n) return 0;
  uint64_t v = mid[i];
  if (up) v |= up[i];
  if (down) v |= down[i];
  return v;
}

void dilate3_row_scalar(const uint64_t* up, const uint64_t* mid, const uint64_t* down,
                        uint64_t* out, long long n) {
  uint64_t prev = 0, cur = merged(up, mid, down, n, 0);
  for (long long i = 0; i < n; ++i) {
    uint64_t next = merged(up, mid, down, n, i + 1);
    out[i] = cur | (cur << 1) | (cur >> 1) | (prev >> 63) | (next << 63);
    prev = cur;
    cur = next;
  }
}

void stamp_segment_row_scalar(uint64_t* row, long long j0, long long j1, double x0, double h,
                              double cy, double ax, double ay, double bx, double by, double r2) {
  double dx = bx - ax, dy = by - ay;
  double dd = dx * dx + dy * dy;
  double inv_dd = 1.0 / dd;
  double py = cy - ay;
  for (long long j = j0; j < j1; ++j) {
    double cx = x0 + (double(j) + 0.5) * h;
    double px = cx - ax;
    double t = (px * dx + py * dy) * inv_dd;
    t = t < 0.0 ? 0.0 : t;
    t = t > 1.0 ? 1.0 : t;
    double qx = px - t * dx;
    double qy = py - t * dy;
    if (qx * qx + qy * qy <= r2) row[j >> 6] |= 1ull << (j & 63);
  }
}

} // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", row_shifted_and_any_scalar, dilate3_row_scalar,
                         stamp_segment_row_scalar};
  return k;
}

} // namespace wildtorus::simd
