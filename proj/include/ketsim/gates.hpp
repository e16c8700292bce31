#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "ketsim/linalg.hpp"

namespace ketsim {

// A named k-qubit operator. For multi-qubit gates the matrix is read in the
// convention that the first argument qubit is the most significant index bit,
// so CNOT's first argument is the control.
struct NamedGate {
  std::string_view name;
  int arity = 1;
  const DenseMatrix* matrix = nullptr;
};

// Built-ins: I, X, Y, Z, H, CNOT, SWAP, CZ. Case-sensitive.
std::span<const NamedGate> builtin_gates();
const DenseMatrix* find_builtin(std::string_view name);

}  // namespace ketsim
