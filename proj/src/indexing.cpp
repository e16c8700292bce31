#include "ketsim/indexing.hpp"

#include <charconv>

namespace ketsim {

namespace {

constexpr const char* kKetCloserUtf8 = "⟩";

}  // namespace

void check_basis_index(const BasisIndex& index) {
  if (index.width < 1 || index.width > kMaxIndexWidth) {
    throw Error("basis index width " + std::to_string(index.width) +
                " out of range [1, " + std::to_string(kMaxIndexWidth) + "]");
  }
  if ((index.value >> index.width) != 0) {
    throw Error("basis index value " + std::to_string(index.value) +
                " does not fit " + std::to_string(index.width) + " qubits");
  }
}

BasisIndex index_of_bits(std::string_view bits) {
  if (bits.empty()) throw Error("empty bit string");
  if (bits.size() > static_cast<std::size_t>(kMaxIndexWidth)) {
    throw Error("bit string wider than " + std::to_string(kMaxIndexWidth) + " qubits");
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(std::string("bit string contains non-binary character '") + c + "'");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BasisIndex{value, static_cast<int>(bits.size())};
}

std::string bits_of_index(const BasisIndex& index) {
  check_basis_index(index);
  std::string out(static_cast<std::size_t>(index.width), '0');
  for (int q = 0; q < index.width; ++q) {
    if ((index.value >> q) & 1u) out[static_cast<std::size_t>(index.width - 1 - q)] = '1';
  }
  return out;
}

std::uint64_t tensor_index(std::uint64_t p, std::uint64_t q, std::uint64_t dim_w) {
  if (dim_w == 0) throw Error("tensor factor dimension is zero");
  if (q >= dim_w) {
    throw Error("right-factor index " + std::to_string(q) + " exceeds dimension " +
                std::to_string(dim_w));
  }
  if (p != 0 && p > (UINT64_MAX - q) / dim_w) throw Error("tensor index overflow");
  return q + p * dim_w;
}

std::vector<int> excited_qubits(const BasisIndex& index) {
  check_basis_index(index);
  std::vector<int> out;
  for (int q = 0; q < index.width; ++q) {
    if ((index.value >> q) & 1u) out.push_back(q);
  }
  return out;
}

std::string format_ket(const BasisIndex& index, KetStyle style, bool ascii) {
  check_basis_index(index);
  std::string s = "|";
  s += style == KetStyle::binary ? bits_of_index(index) : std::to_string(index.value);
  s += ascii ? ">" : kKetCloserUtf8;
  return s;
}

BasisIndex parse_ket(std::string_view text, int decimal_width) {
  if (text.size() < 2 || text.front() != '|') {
    throw Error("malformed ket '" + std::string(text) + "': expected |...>");
  }
  std::string_view payload = text.substr(1);
  std::string_view closer_utf8 = kKetCloserUtf8;
  if (payload.size() >= closer_utf8.size() &&
      payload.substr(payload.size() - closer_utf8.size()) == closer_utf8) {
    payload.remove_suffix(closer_utf8.size());
  } else if (payload.back() == '>') {
    payload.remove_suffix(1);
  } else {
    throw Error("malformed ket '" + std::string(text) + "': missing closer");
  }
  if (payload.empty()) throw Error("malformed ket '" + std::string(text) + "': empty");

  bool binary = true;
  bool decimal = true;
  for (char c : payload) {
    if (c != '0' && c != '1') binary = false;
    if (c < '0' || c > '9') decimal = false;
  }
  if (binary) return index_of_bits(payload);
  if (!decimal) {
    throw Error("malformed ket '" + std::string(text) + "': payload is neither bits nor a decimal index");
  }
  if (decimal_width < 1) {
    throw Error("decimal ket '" + std::string(text) + "' needs an explicit qubit count");
  }
  std::uint64_t value = 0;
  auto res = std::from_chars(payload.data(), payload.data() + payload.size(), value);
  if (res.ec != std::errc{} || res.ptr != payload.data() + payload.size()) {
    throw Error("malformed ket '" + std::string(text) + "': bad decimal index");
  }
  BasisIndex index{value, decimal_width};
  check_basis_index(index);
  return index;
}

}  // namespace ketsim
