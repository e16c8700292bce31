#pragma once

#include <cstddef>
#include <span>

#include "ketsim/linalg.hpp"

namespace ketsim::kernels {

// Amplitude kernels come in a scalar reference flavor and SIMD flavors
// selected at runtime. All flavors produce bit-identical amplitudes; the
// equivalence is asserted by tests, which is why none of this code may be
// compiled with FP contraction enabled.
enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);

// Backends usable in this process, scalar first.
std::span<const Backend> available_backends();

// Fastest available backend.
Backend preferred_backend();

Backend active_backend();
void set_active_backend(Backend b);  // throws when b is not available

// In-place single-qubit update; u is the row-major 2x2 gate, target the state
// bit it acts on. dim is the full state size (a power of two).
void apply_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u, Backend b);

// In-place two-qubit update; u is row-major 4x4. bit_hi is the state bit
// addressed by the gate's high index bit (the first listed qubit), bit_lo the
// low one.
void apply_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u,
              Backend b);

// Generic gather/scatter path for k >= 1; bits[t] is the state bit for gate
// bit k-1-t (first listed qubit first). Scalar only, but bit-identical to the
// specialized kernels on the same input.
void apply_kq(cdouble* amps, std::size_t dim, std::span<const int> bits,
              const DenseMatrix& u);

}  // namespace ketsim::kernels
