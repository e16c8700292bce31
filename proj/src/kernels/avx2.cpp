#include <immintrin.h>

#include "kernels_impl.hpp"

// AVX2 flavors of the 1q/2q kernels. Two complex doubles per 256-bit vector;
// products and sums are issued in exactly the order the scalar reference
// uses, so results are bit-identical (this file must not be compiled with FP
// contraction).

namespace ketsim::kernels::detail {

namespace {

// v holds [a.re, a.im, b.re, b.im]; cr/ci hold the gate entry's re/im
// duplicated per 128-bit lane. Returns v scaled by that entry.
inline __m256d cmul_pairs(__m256d v, __m256d cr, __m256d ci) {
  const __m256d t1 = _mm256_mul_pd(v, cr);
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  const __m256d t2 = _mm256_mul_pd(swapped, ci);
  return _mm256_addsub_pd(t1, t2);
}

inline __m256d broadcast_re(cdouble z) { return _mm256_set1_pd(z.real()); }
inline __m256d broadcast_im(cdouble z) { return _mm256_set1_pd(z.imag()); }

inline double* flat(cdouble* p) { return reinterpret_cast<double*>(p); }

}  // namespace

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

void avx2_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u) {
  if (target == 0) {
    // Pairs are adjacent: one vector holds a full (x, y) pair. Pack the gate
    // columns so the low lane computes row 0 and the high lane row 1.
    const __m256d c0r = _mm256_setr_pd(u[0].real(), u[0].real(), u[2].real(), u[2].real());
    const __m256d c0i = _mm256_setr_pd(u[0].imag(), u[0].imag(), u[2].imag(), u[2].imag());
    const __m256d c1r = _mm256_setr_pd(u[1].real(), u[1].real(), u[3].real(), u[3].real());
    const __m256d c1i = _mm256_setr_pd(u[1].imag(), u[1].imag(), u[3].imag(), u[3].imag());
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(flat(amps + i));
      const __m256d x2 = _mm256_permute2f128_pd(v, v, 0x00);
      const __m256d y2 = _mm256_permute2f128_pd(v, v, 0x11);
      const __m256d out = _mm256_add_pd(cmul_pairs(x2, c0r, c0i), cmul_pairs(y2, c1r, c1i));
      _mm256_storeu_pd(flat(amps + i), out);
    }
    return;
  }

  const std::size_t half = std::size_t{1} << target;
  const __m256d u00r = broadcast_re(u[0]), u00i = broadcast_im(u[0]);
  const __m256d u01r = broadcast_re(u[1]), u01i = broadcast_im(u[1]);
  const __m256d u10r = broadcast_re(u[2]), u10i = broadcast_im(u[2]);
  const __m256d u11r = broadcast_re(u[3]), u11i = broadcast_im(u[3]);
  for (std::size_t base = 0; base < dim; base += half << 1) {
    for (std::size_t j = 0; j < half; j += 2) {
      double* p0 = flat(amps + base + j);
      double* p1 = flat(amps + base + j + half);
      const __m256d x = _mm256_loadu_pd(p0);
      const __m256d y = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, _mm256_add_pd(cmul_pairs(x, u00r, u00i), cmul_pairs(y, u01r, u01i)));
      _mm256_storeu_pd(p1, _mm256_add_pd(cmul_pairs(x, u10r, u10i), cmul_pairs(y, u11r, u11i)));
    }
  }
}

void avx2_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u) {
  if (bit_hi == 0 || bit_lo == 0) {
    // The quartet is not stride-2-contiguous in its low member; the scalar
    // path is the defined behavior (and bit-identical anyway).
    scalar_2q(amps, dim, bit_hi, bit_lo, u);
    return;
  }
  const std::size_t mh = std::size_t{1} << bit_hi;
  const std::size_t ml = std::size_t{1} << bit_lo;
  const std::size_t shi = mh > ml ? mh : ml;
  const std::size_t slo = mh > ml ? ml : mh;

  __m256d re[16], im[16];
  for (int e = 0; e < 16; ++e) {
    re[e] = broadcast_re(u[e]);
    im[e] = broadcast_im(u[e]);
  }
  for (std::size_t i2 = 0; i2 < dim; i2 += shi << 1) {
    for (std::size_t i1 = i2; i1 < i2 + shi; i1 += slo << 1) {
      for (std::size_t base = i1; base < i1 + slo; base += 2) {
        double* p0 = flat(amps + base);
        double* p1 = flat(amps + base + ml);
        double* p2 = flat(amps + base + mh);
        double* p3 = flat(amps + base + mh + ml);
        const __m256d x0 = _mm256_loadu_pd(p0);
        const __m256d x1 = _mm256_loadu_pd(p1);
        const __m256d x2 = _mm256_loadu_pd(p2);
        const __m256d x3 = _mm256_loadu_pd(p3);
        double* out[4] = {p0, p1, p2, p3};
        for (int g = 0; g < 4; ++g) {
          __m256d acc = cmul_pairs(x0, re[4 * g + 0], im[4 * g + 0]);
          acc = _mm256_add_pd(acc, cmul_pairs(x1, re[4 * g + 1], im[4 * g + 1]));
          acc = _mm256_add_pd(acc, cmul_pairs(x2, re[4 * g + 2], im[4 * g + 2]));
          acc = _mm256_add_pd(acc, cmul_pairs(x3, re[4 * g + 3], im[4 * g + 3]));
          _mm256_storeu_pd(out[g], acc);
        }
      }
    }
  }
}

}  // namespace ketsim::kernels::detail
