#pragma once

#include <cstddef>

#include "ketsim/types.hpp"

// Internals shared between the dispatcher and the per-ISA translation units.
namespace ketsim::kernels::detail {

// Complex product with the exact operation order every backend reproduces:
// re = a.re*b.re - a.im*b.im, im = a.im*b.re + a.re*b.im. No FMA.
inline cdouble cmul(cdouble a, cdouble b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.imag() * b.real() + a.real() * b.imag()};
}

void scalar_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u);
void scalar_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u);

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2();
void avx2_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u);
void avx2_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u);
#endif

#if defined(__aarch64__)
void neon_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u);
void neon_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u);
#endif

}  // namespace ketsim::kernels::detail
