#include "ketsim/lifting.hpp"

#include <algorithm>

#include "ketsim/gates.hpp"
#include "ketsim/indexing.hpp"

namespace ketsim {

int gate_arity(const DenseMatrix& matrix) {
  if (!matrix.is_square() || matrix.rows() < 2) {
    throw Error("gate matrix must be square with dimension >= 2");
  }
  const std::size_t dim = matrix.rows();
  if ((dim & (dim - 1)) != 0) {
    throw Error("gate dimension " + std::to_string(dim) + " is not a power of two");
  }
  int k = 0;
  while ((std::size_t{1} << k) < dim) ++k;
  return k;
}

void validate_gate_application(const GateApplication& app, int n) {
  if (n < 1 || n > kMaxIndexWidth) {
    throw Error("register width " + std::to_string(n) + " out of range");
  }
  const int k = gate_arity(app.matrix);
  if (!all_finite(app.matrix)) {
    throw Error("gate '" + app.name + "' has non-finite entries");
  }
  if (static_cast<int>(app.qubits.size()) != k) {
    throw Error("gate '" + app.name + "' takes " + std::to_string(k) + " qubits, got " +
                std::to_string(app.qubits.size()));
  }
  for (std::size_t i = 0; i < app.qubits.size(); ++i) {
    const int q = app.qubits[i];
    if (q < 0 || q >= n) {
      throw Error("qubit " + std::to_string(q) + " outside register of width " +
                  std::to_string(n));
    }
    for (std::size_t j = i + 1; j < app.qubits.size(); ++j) {
      if (app.qubits[j] == q) {
        throw Error("gate '" + app.name + "' lists qubit " + std::to_string(q) + " twice");
      }
    }
  }
}

FactorOrder initial_factor_order(std::span<const int> qubits, int n) {
  if (n < 1) throw Error("register width must be positive");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int q : qubits) {
    if (q < 0 || q >= n) {
      throw Error("qubit " + std::to_string(q) + " outside register of width " +
                  std::to_string(n));
    }
    if (used[static_cast<std::size_t>(q)]) {
      throw Error("qubit " + std::to_string(q) + " listed twice");
    }
    used[static_cast<std::size_t>(q)] = true;
  }
  FactorOrder order;
  order.reserve(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    if (!used[static_cast<std::size_t>(q)]) order.push_back(q);
  }
  order.insert(order.end(), qubits.begin(), qubits.end());
  return order;
}

namespace {

void check_factor_order(const FactorOrder& order) {
  const int n = static_cast<int>(order.size());
  std::vector<bool> seen(order.size(), false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error("factor order is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::uint64_t swap_bits(std::uint64_t x, int a, int b) {
  const std::uint64_t da = (x >> a) & 1u;
  const std::uint64_t db = (x >> b) & 1u;
  if (da != db) x ^= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  return x;
}

}  // namespace

std::vector<int> transposition_sequence(FactorOrder order) {
  check_factor_order(order);
  const int n = static_cast<int>(order.size());
  std::vector<int> sequence;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (order[j] < order[j + 1]) {
        std::swap(order[j], order[j + 1]);
        sequence.push_back(n - 2 - j);  // position j holds the (n-1-j)-th factor from the right
        changed = true;
      }
    }
  }
  return sequence;
}

DenseMatrix tau_matrix(int i, int n, std::size_t max_dim) {
  if (n < 2 || i < 0 || i > n - 2) {
    throw Error("tau index " + std::to_string(i) + " invalid for width " + std::to_string(n));
  }
  const DenseMatrix* swap = find_builtin("SWAP");
  DenseMatrix out =
      kron(DenseMatrix::identity(std::size_t{1} << (n - i - 2)), *swap, max_dim);
  if (i > 0) out = kron(out, DenseMatrix::identity(std::size_t{1} << i), max_dim);
  return out;
}

DenseMatrix reinterpret(const DenseMatrix& gate, std::span<const int> from_order,
                        std::span<const int> to_order) {
  const int k = gate_arity(gate);
  if (static_cast<int>(from_order.size()) != k || static_cast<int>(to_order.size()) != k) {
    throw Error("ordering size does not match gate arity");
  }
  std::vector<int> from_sorted(from_order.begin(), from_order.end());
  std::vector<int> to_sorted(to_order.begin(), to_order.end());
  std::sort(from_sorted.begin(), from_sorted.end());
  std::sort(to_sorted.begin(), to_sorted.end());
  if (from_sorted != to_sorted ||
      std::adjacent_find(from_sorted.begin(), from_sorted.end()) != from_sorted.end()) {
    throw Error("orderings must arrange the same distinct labels");
  }

  // Position of each label in from_order.
  std::vector<int> from_pos(from_order.size());
  for (int t = 0; t < k; ++t) {
    for (int u = 0; u < k; ++u) {
      if (from_order[static_cast<std::size_t>(u)] == to_order[static_cast<std::size_t>(t)]) {
        from_pos[static_cast<std::size_t>(t)] = u;
      }
    }
  }

  const std::size_t dim = std::size_t{1} << k;
  std::vector<std::size_t> map(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t x = 0;
    for (int t = 0; t < k; ++t) {
      if ((r >> (k - 1 - t)) & 1u) {
        x |= std::size_t{1} << (k - 1 - from_pos[static_cast<std::size_t>(t)]);
      }
    }
    map[r] = x;
  }
  DenseMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = gate(map[r], map[c]);
  }
  return out;
}

DenseMatrix lift(const GateApplication& app, int n, std::size_t max_dim) {
  validate_gate_application(app, n);
  if (n >= 64 || (std::size_t{1} << n) > max_dim) {
    throw Error("lift of width " + std::to_string(n) + " exceeds dense cap of " +
                std::to_string(max_dim));
  }
  const int k = static_cast<int>(app.qubits.size());
  const std::size_t dim = std::size_t{1} << n;

  const DenseMatrix padded =
      kron(DenseMatrix::identity(std::size_t{1} << (n - k)), app.matrix, max_dim);

  const std::vector<int> sequence =
      transposition_sequence(initial_factor_order(app.qubits, n));

  // sigma maps padded-order indices to canonical indices; it is the basis
  // permutation the tau product realizes.
  std::vector<std::size_t> sigma_inv(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::uint64_t y = x;
    for (int t : sequence) y = swap_bits(y, t, t + 1);
    sigma_inv[static_cast<std::size_t>(y)] = x;
  }

  DenseMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out(r, c) = padded(sigma_inv[r], sigma_inv[c]);
    }
  }
  return out;
}

}  // namespace ketsim
