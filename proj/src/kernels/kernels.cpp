#include "ketsim/kernels.hpp"

#include <algorithm>
#include <vector>

#include "kernels_impl.hpp"

namespace ketsim::kernels {

namespace detail {

void scalar_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u) {
  const std::size_t half = std::size_t{1} << target;
  const cdouble u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
  for (std::size_t base = 0; base < dim; base += half << 1) {
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t i0 = base + j;
      const std::size_t i1 = i0 + half;
      const cdouble x = amps[i0];
      const cdouble y = amps[i1];
      amps[i0] = cmul(u00, x) + cmul(u01, y);
      amps[i1] = cmul(u10, x) + cmul(u11, y);
    }
  }
}

void scalar_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u) {
  const std::size_t mh = std::size_t{1} << bit_hi;
  const std::size_t ml = std::size_t{1} << bit_lo;
  const std::size_t shi = std::max(mh, ml);
  const std::size_t slo = std::min(mh, ml);
  for (std::size_t i2 = 0; i2 < dim; i2 += shi << 1) {
    for (std::size_t i1 = i2; i1 < i2 + shi; i1 += slo << 1) {
      for (std::size_t base = i1; base < i1 + slo; ++base) {
        const cdouble x0 = amps[base];
        const cdouble x1 = amps[base + ml];
        const cdouble x2 = amps[base + mh];
        const cdouble x3 = amps[base + mh + ml];
        for (std::size_t g = 0; g < 4; ++g) {
          cdouble acc = cmul(u[4 * g + 0], x0);
          acc += cmul(u[4 * g + 1], x1);
          acc += cmul(u[4 * g + 2], x2);
          acc += cmul(u[4 * g + 3], x3);
          const std::size_t addr = base + (g & 2 ? mh : 0) + (g & 1 ? ml : 0);
          amps[addr] = acc;
        }
      }
    }
  }
}

}  // namespace detail

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

namespace {

std::vector<Backend> detect_backends() {
  std::vector<Backend> list{Backend::scalar};
#if defined(__x86_64__) || defined(_M_X64)
  if (detail::cpu_has_avx2()) list.push_back(Backend::avx2);
#endif
#if defined(__aarch64__)
  list.push_back(Backend::neon);
#endif
  return list;
}

const std::vector<Backend>& backends() {
  static const std::vector<Backend> list = detect_backends();
  return list;
}

Backend g_active = preferred_backend();

void check_state(std::size_t dim, int bit) {
  if (dim < 2 || (dim & (dim - 1)) != 0) throw Error("state size must be a power of two");
  if (bit < 0 || (std::size_t{1} << bit) >= dim) throw Error("state bit out of range");
}

}  // namespace

std::span<const Backend> available_backends() { return backends(); }

Backend preferred_backend() { return backends().back(); }

Backend active_backend() { return g_active; }

void set_active_backend(Backend b) {
  for (Backend have : backends()) {
    if (have == b) {
      g_active = b;
      return;
    }
  }
  throw Error(std::string("backend '") + backend_name(b) + "' is not available");
}

void apply_1q(cdouble* amps, std::size_t dim, int target, const cdouble* u, Backend b) {
  check_state(dim, target);
  switch (b) {
    case Backend::scalar:
      detail::scalar_1q(amps, dim, target, u);
      return;
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      detail::avx2_1q(amps, dim, target, u);
      return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
      detail::neon_1q(amps, dim, target, u);
      return;
#endif
    default:
      throw Error(std::string("backend '") + backend_name(b) + "' not compiled in");
  }
}

void apply_2q(cdouble* amps, std::size_t dim, int bit_hi, int bit_lo, const cdouble* u,
              Backend b) {
  check_state(dim, bit_hi);
  check_state(dim, bit_lo);
  if (bit_hi == bit_lo) throw Error("two-qubit kernel needs distinct bits");
  switch (b) {
    case Backend::scalar:
      detail::scalar_2q(amps, dim, bit_hi, bit_lo, u);
      return;
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
      detail::avx2_2q(amps, dim, bit_hi, bit_lo, u);
      return;
#endif
#if defined(__aarch64__)
    case Backend::neon:
      detail::neon_2q(amps, dim, bit_hi, bit_lo, u);
      return;
#endif
    default:
      throw Error(std::string("backend '") + backend_name(b) + "' not compiled in");
  }
}

void apply_kq(cdouble* amps, std::size_t dim, std::span<const int> bits,
              const DenseMatrix& u) {
  const int k = static_cast<int>(bits.size());
  if (k < 1) throw Error("gate must act on at least one qubit");
  for (int bit : bits) check_state(dim, bit);
  const std::size_t m = std::size_t{1} << k;
  if (u.rows() != m || u.cols() != m) throw Error("gate matrix does not match bit count");
  if (m > dim) throw Error("gate larger than state");
  std::vector<int> sorted(bits.begin(), bits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("gate bits must be distinct");
  }

  // Offset of gate-local index g from a base index with all argument bits 0.
  std::vector<std::size_t> offset(m, 0);
  for (std::size_t g = 0; g < m; ++g) {
    for (int t = 0; t < k; ++t) {
      if ((g >> (k - 1 - t)) & 1u) offset[g] |= std::size_t{1} << bits[t];
    }
  }

  std::vector<cdouble> in(m);
  const std::size_t nbase = dim >> k;
  for (std::size_t w = 0; w < nbase; ++w) {
    // Spread w across the non-argument bit positions.
    std::size_t base = w;
    for (int bit : sorted) {
      const std::size_t low = base & ((std::size_t{1} << bit) - 1);
      base = ((base >> bit) << (bit + 1)) | low;
    }
    for (std::size_t g = 0; g < m; ++g) in[g] = amps[base + offset[g]];
    for (std::size_t g = 0; g < m; ++g) {
      cdouble acc = detail::cmul(u(g, 0), in[0]);
      for (std::size_t h = 1; h < m; ++h) acc += detail::cmul(u(g, h), in[h]);
      amps[base + offset[g]] = acc;
    }
  }
}

}  // namespace ketsim::kernels
