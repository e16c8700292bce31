#include <arm_neon.h>

#include <algorithm>

#include "kernels_impl.hpp"

// NEON flavors of the 1q/2q kernels. One complex double per 128-bit vector;
// products and sums are issued in exactly the order the scalar reference
// uses, so results are bit-identical (this file must not be compiled with FP
// contraction).

namespace ketsim::kernels::detail {

namespace {

// [-1, 1]: negates the real slot so t1 + sign*t2 matches the scalar
// (re1 - re2, im1 + im2).
inline float64x2_t real_negator() { return vsetq_lane_f64(1.0, vdupq_n_f64(-1.0), 1); }

// v holds [b.re, b.im]; cr/ci hold the gate entry's re/im duplicated across
// both slots. Returns v scaled by that entry.
inline float64x2_t cmul_vec(float64x2_t cr, float64x2_t ci, float64x2_t v,
                            float64x2_t sign) {
  const float64x2_t t1 = vmulq_f64(cr, v);
  const float64x2_t t2 = vmulq_f64(ci, vextq_f64(v, v, 1));
  return vaddq_f64(t1, vmulq_f64(sign, t2));
}

inline double* flat(cdouble* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void neon_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u) {
  double* data = flat(amps);
  const std::size_t half = std::size_t{1} << target;
  const float64x2_t sign = real_negator();
  float64x2_t ur[4];
  float64x2_t ui[4];
  for (int t = 0; t < 4; ++t) {
    ur[t] = vdupq_n_f64(u[t].real());
    ui[t] = vdupq_n_f64(u[t].imag());
  }
  for (std::size_t base = 0; base < dim; base += half << 1) {
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t i0 = base + j;
      const std::size_t i1 = i0 + half;
      const float64x2_t x = vld1q_f64(data + 2 * i0);
      const float64x2_t y = vld1q_f64(data + 2 * i1);
      vst1q_f64(data + 2 * i0, vaddq_f64(cmul_vec(ur[0], ui[0], x, sign),
                                         cmul_vec(ur[1], ui[1], y, sign)));
      vst1q_f64(data + 2 * i1, vaddq_f64(cmul_vec(ur[2], ui[2], x, sign),
                                         cmul_vec(ur[3], ui[3], y, sign)));
    }
  }
}

void neon_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u) {
  double* data = flat(amps);
  const std::size_t mh = std::size_t{1} << bit_hi;
  const std::size_t ml = std::size_t{1} << bit_lo;
  const std::size_t shi = std::max(mh, ml);
  const std::size_t slo = std::min(mh, ml);
  const float64x2_t sign = real_negator();
  float64x2_t ur[16];
  float64x2_t ui[16];
  for (int t = 0; t < 16; ++t) {
    ur[t] = vdupq_n_f64(u[t].real());
    ui[t] = vdupq_n_f64(u[t].imag());
  }
  for (std::size_t i2 = 0; i2 < dim; i2 += shi << 1) {
    for (std::size_t i1 = i2; i1 < i2 + shi; i1 += slo << 1) {
      for (std::size_t base = i1; base < i1 + slo; ++base) {
        const float64x2_t x0 = vld1q_f64(data + 2 * base);
        const float64x2_t x1 = vld1q_f64(data + 2 * (base + ml));
        const float64x2_t x2 = vld1q_f64(data + 2 * (base + mh));
        const float64x2_t x3 = vld1q_f64(data + 2 * (base + mh + ml));
        for (std::size_t g = 0; g < 4; ++g) {
          float64x2_t acc = cmul_vec(ur[4 * g + 0], ui[4 * g + 0], x0, sign);
          acc = vaddq_f64(acc, cmul_vec(ur[4 * g + 1], ui[4 * g + 1], x1, sign));
          acc = vaddq_f64(acc, cmul_vec(ur[4 * g + 2], ui[4 * g + 2], x2, sign));
          acc = vaddq_f64(acc, cmul_vec(ur[4 * g + 3], ui[4 * g + 3], x3, sign));
          const std::size_t addr = base + (g & 2 ? mh : 0) + (g & 1 ? ml : 0);
          vst1q_f64(data + 2 * addr, acc);
        }
      }
    }
  }
}

}  // namespace ketsim::kernels::detail
