#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ketsim/types.hpp"

namespace ketsim {

// Widths are capped so every basis index fits a 64-bit value with headroom.
inline constexpr int kMaxIndexWidth = 62;

// A computational-basis index together with the register width it lives in.
// Qubit 0 is the least significant bit: |01000> over five qubits is index 8,
// and the single excited qubit is qubit 3.
struct BasisIndex {
  std::uint64_t value = 0;
  int width = 1;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// Throws Error unless 1 <= width <= kMaxIndexWidth and value < 2^width.
void check_basis_index(const BasisIndex& index);

// "01000" -> {8, 5}. The leftmost character is the highest qubit.
BasisIndex index_of_bits(std::string_view bits);

// Inverse of index_of_bits; zero-padded to the full width.
std::string bits_of_index(const BasisIndex& index);

// Row index of |p> (x) |q> when the right factor has dimension dim_w:
// q + p * dim_w. dim_w must be nonzero and the product must not overflow.
std::uint64_t tensor_index(std::uint64_t p, std::uint64_t q, std::uint64_t dim_w);

// Labels of the qubits set to 1, ascending.
std::vector<int> excited_qubits(const BasisIndex& index);

enum class KetStyle { binary, decimal };

// format_ket({8,5}, binary) -> "|01000>" with a U+27E9 closer; ascii swaps
// the closer for '>'.
std::string format_ket(const BasisIndex& index, KetStyle style = KetStyle::binary,
                       bool ascii = false);

// Accepts "|01000>" in either closer style. A payload consisting solely of
// 0/1 characters is read as bits; any other payload must be a decimal basis
// index and requires an explicit width.
BasisIndex parse_ket(std::string_view text, int decimal_width = 0);

}  // namespace ketsim
