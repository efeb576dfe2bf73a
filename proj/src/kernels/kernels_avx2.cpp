// AVX2 variants of the grid kernels. Must stay bit-identical to the scalar
// reference: same IEEE operations in the same per-lane order, no fma.
#include <immintrin.h>

#include "wildtorus/kernels.hpp"

namespace wildtorus::simd {

namespace {

inline uint64_t gather_word(const uint64_t* b, long long b_words, long long pos) {
  long long w = pos >> 6;
  int s = int(pos - (w << 6));
  uint64_t lo = (w >= 0 && w < b_words) ? b[w] : 0;
  if (s == 0) return lo;
  uint64_t hi = (w + 1 >= 0 && w + 1 < b_words) ? b[w + 1] : 0;
  return (lo >> s) | (hi << (64 - s));
}

bool row_shifted_and_any_avx2(const uint64_t* a, const uint64_t* b, long long b_words,
                              long long shift, long long j0, long long j1) {
  if (j0 >= j1) return false;
  long long w0 = j0 >> 6, w1 = (j1 - 1) >> 6;

  auto scalar_word = [&](long long w) {
    uint64_t aw = a[w];
    if (w == w0) aw &= ~0ull << (j0 & 63);
    if (w == w1) {
      int r = int(j1 - (w << 6));
      if (r < 64) aw &= ~0ull >> (64 - r);
    }
    if (!aw) return false;
    return (aw & gather_word(b, b_words, (w << 6) - shift)) != 0;
  };

  long long w = w0;
  // edge word with a partial mask
  if ((j0 & 63) != 0 || w0 == w1) {
    if (scalar_word(w)) return true;
    ++w;
  }
  long long wb_base = 0;
  int s = 0;
  {
    long long pos = (w << 6) - shift;
    long long wb = pos >> 6;
    s = int(pos - (wb << 6));
    wb_base = wb - w; // b word index = w + wb_base
  }
  // vector main loop over full words, only where the b reads are in range
  for (; w + 4 <= w1; w += 4) {
    long long wb = w + wb_base;
    if (wb < 0 || wb + 5 > b_words) {
      for (int k = 0; k < 4; ++k)
        if (scalar_word(w + k)) return true;
      continue;
    }
    __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + wb));
    __m256i bv;
    if (s == 0) {
      bv = b0;
    } else {
      __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + wb + 1));
      bv = _mm256_or_si256(_mm256_srli_epi64(b0, s), _mm256_slli_epi64(b1, 64 - s));
    }
    __m256i hit = _mm256_and_si256(av, bv);
    if (!_mm256_testz_si256(hit, hit)) return true;
  }
  for (; w <= w1; ++w)
    if (scalar_word(w)) return true;
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

void dilate3_row_avx2(const uint64_t* up, const uint64_t* mid, const uint64_t* down,
                      uint64_t* out, long long n) {
  auto scalar_at = [&](long long i) {
    uint64_t cur = merged(up, mid, down, n, i);
    uint64_t prev = merged(up, mid, down, n, i - 1);
    uint64_t next = merged(up, mid, down, n, i + 1);
    out[i] = cur | (cur << 1) | (cur >> 1) | (prev >> 63) | (next << 63);
  };
  long long i = 0;
  if (n > 0) scalar_at(i++);
  auto loadm = [&](long long at) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mid + at));
    if (up) v = _mm256_or_si256(v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(up + at)));
    if (down)
      v = _mm256_or_si256(v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(down + at)));
    return v;
  };
  for (; i + 5 <= n; i += 4) { // needs words i-1 .. i+4 in range
    __m256i cur = loadm(i);
    __m256i prev = loadm(i - 1);
    __m256i next = loadm(i + 1);
    __m256i v = _mm256_or_si256(cur, _mm256_or_si256(_mm256_slli_epi64(cur, 1),
                                                     _mm256_srli_epi64(cur, 1)));
    v = _mm256_or_si256(v, _mm256_srli_epi64(prev, 63));
    v = _mm256_or_si256(v, _mm256_slli_epi64(next, 63));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) scalar_at(i);
}

void stamp_segment_row_avx2(uint64_t* row, long long j0, long long j1, double x0, double h,
                            double cy, double ax, double ay, double bx, double by, double r2) {
  double dx = bx - ax, dy = by - ay;
  double dd = dx * dx + dy * dy;
  double inv_dd = 1.0 / dd;
  double py = cy - ay;

  auto scalar_one = [&](long long j) {
    double cx = x0 + (double(j) + 0.5) * h;
    double px = cx - ax;
    double t = (px * dx + py * dy) * inv_dd;
    t = t < 0.0 ? 0.0 : t;
    t = t > 1.0 ? 1.0 : t;
    double qx = px - t * dx;
    double qy = py - t * dy;
    if (qx * qx + qy * qy <= r2) row[j >> 6] |= 1ull << (j & 63);
  };

  const __m256d vhalf = _mm256_set1_pd(0.5);
  const __m256d vh = _mm256_set1_pd(h);
  const __m256d vx0 = _mm256_set1_pd(x0);
  const __m256d vax = _mm256_set1_pd(ax);
  const __m256d vdx = _mm256_set1_pd(dx);
  const __m256d vdy = _mm256_set1_pd(dy);
  const __m256d vinvdd = _mm256_set1_pd(inv_dd);
  const __m256d vpydy = _mm256_set1_pd(py * dy);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vr2 = _mm256_set1_pd(r2);

  long long j = j0;
  for (; j < j1 && (j & 3) != 0; ++j) scalar_one(j);
  for (; j + 4 <= j1; j += 4) {
    __m256d jd = _mm256_set_pd(double(j + 3), double(j + 2), double(j + 1), double(j));
    __m256d cx = _mm256_add_pd(vx0, _mm256_mul_pd(_mm256_add_pd(jd, vhalf), vh));
    __m256d px = _mm256_sub_pd(cx, vax);
    // (px*dx + py*dy) * inv_dd, same op order as scalar
    __m256d t = _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(px, vdx), vpydy), vinvdd);
    t = _mm256_max_pd(t, vzero);
    t = _mm256_min_pd(t, vone);
    __m256d qx = _mm256_sub_pd(px, _mm256_mul_pd(t, vdx));
    __m256d qy = _mm256_sub_pd(vpy, _mm256_mul_pd(t, vdy));
    __m256d d2 = _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
    int mask = _mm256_movemask_pd(_mm256_cmp_pd(d2, vr2, _CMP_LE_OQ));
    if (mask) row[j >> 6] |= uint64_t(mask) << (j & 63);
  }
  for (; j < j1; ++j) scalar_one(j);
}

} // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{"avx2", row_shifted_and_any_avx2, dilate3_row_avx2,
                         stamp_segment_row_avx2};
  return k;
}

} // namespace wildtorus::simd
