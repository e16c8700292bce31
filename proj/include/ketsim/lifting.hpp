#pragma once

#include <span>
#include <string>
#include <vector>

#include "ketsim/linalg.hpp"

namespace ketsim {

// A register-factor ordering, most significant factor first. Entry t is the
// qubit label sitting at tensor position t (position n-1-t counted from the
// right). The canonical ordering is (n-1, ..., 1, 0).
using FactorOrder = std::vector<int>;

// A gate matrix bound to the qubits it acts on. The matrix is read with the
// first listed qubit as the most significant index bit, so for CNOT the
// first qubit is the control.
struct GateApplication {
  std::string name;
  DenseMatrix matrix;
  std::vector<int> qubits;
  int line = 0;  // source line when the application came from a program
};

// log2 of the matrix dimension. Throws unless the matrix is square with a
// power-of-two dimension >= 2.
int gate_arity(const DenseMatrix& matrix);

// Checks matrix shape, finiteness, and that qubits are distinct labels in
// [0, n) matching the matrix arity. Does not check unitarity; that is a
// caller policy.
void validate_gate_application(const GateApplication& app, int n);

// Ordering after padding: the labels the gate does not touch, descending,
// followed by the argument tuple as written.
// initial_factor_order({1,3}, 5) = (4, 2, 0, 1, 3).
FactorOrder initial_factor_order(std::span<const int> qubits, int n);

// Adjacent-transposition indices sorting `order` into the canonical
// descending ordering, in application order (first entry acts first).
// tau_i exchanges the factors at positions i and i+1 counted from the right.
// The sequence length never exceeds n(n-1)/2.
std::vector<int> transposition_sequence(FactorOrder order);

// Matrix of tau_i on n qubits: identity on the n-i-2 most significant
// factors, SWAP across positions i+1 and i, identity below. 0 <= i <= n-2.
DenseMatrix tau_matrix(int i, int n, std::size_t max_dim = kDenseDimCap);

// Rewrites a gate matrix expressed with qubit ordering from_order (most
// significant first) into to_order. Both must order the same label set.
DenseMatrix reinterpret(const DenseMatrix& gate, std::span<const int> from_order,
                        std::span<const int> to_order);

// Full-register matrix for `app` on an n-qubit register: pad the gate with
// identities, then conjugate by the basis permutation built from
// transposition_sequence. Equal to P * pad * P^-1 with P the product of the
// tau matrices in composition order; computed here by permuting rows and
// columns, which is the same matrix without the dense products.
DenseMatrix lift(const GateApplication& app, int n, std::size_t max_dim = kDenseDimCap);

}  // namespace ketsim
