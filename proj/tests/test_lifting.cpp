#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "ketsim/gates.hpp"
#include "ketsim/lifting.hpp"
#include "oracle.hpp"

using namespace ketsim;

namespace {

// The two 4x4 CNOT liftings, frozen: control on qubit 1 (left), control on
// qubit 0 (right). Integer entries, so comparisons are exact.
const double kCnotControl1[4][4] = {
    {1, 0, 0, 0},
    {0, 1, 0, 0},
    {0, 0, 0, 1},
    {0, 0, 1, 0},
};
const double kCnotControl0[4][4] = {
    {1, 0, 0, 0},
    {0, 0, 0, 1},
    {0, 0, 1, 0},
    {0, 1, 0, 0},
};

bool equals_real_table(const DenseMatrix& m, const double (&table)[4][4]) {
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (m(r, c) != cdouble{table[r][c]}) return false;
    }
  }
  return true;
}

GateApplication builtin_app(const char* name, std::vector<int> qubits) {
  return GateApplication{name, *find_builtin(name), std::move(qubits), 0};
}

// Dense-product route: P * pad * P^T with P multiplied out from the tau
// matrices (first sequence entry applied first means it sits rightmost).
DenseMatrix lift_by_matrix_products(const GateApplication& app, int n) {
  const int k = static_cast<int>(app.qubits.size());
  const DenseMatrix pad =
      kron(DenseMatrix::identity(std::size_t{1} << (n - k)), app.matrix);
  const std::vector<int> seq = transposition_sequence(initial_factor_order(app.qubits, n));
  DenseMatrix p = DenseMatrix::identity(std::size_t{1} << n);
  for (int t : seq) p = matmul(tau_matrix(t, n), p);
  return matmul(p, matmul(pad, dagger(p)));
}

}  // namespace

TEST_SUITE("lifting") {

TEST_CASE("initial_factor_order pads non-arguments descending") {
  const std::vector<int> q13{1, 3};
  CHECK(initial_factor_order(q13, 5) == FactorOrder{4, 2, 0, 1, 3});
  CHECK(initial_factor_order(q13, 4) == FactorOrder{2, 0, 1, 3});
  CHECK(initial_factor_order(std::vector<int>{0}, 1) == FactorOrder{0});
  CHECK(initial_factor_order(std::vector<int>{2, 0}, 3) == FactorOrder{1, 2, 0});
  CHECK_THROWS_AS(initial_factor_order(std::vector<int>{1, 1}, 3), Error);
  CHECK_THROWS_AS(initial_factor_order(std::vector<int>{3}, 3), Error);
}

TEST_CASE("transposition_sequence reproduces the worked example") {
  CHECK(transposition_sequence({4, 2, 0, 1, 3}) == std::vector<int>{1, 0, 1, 2});
  CHECK(transposition_sequence({3, 2, 1, 0}) == std::vector<int>{});
  CHECK(transposition_sequence({0, 1}) == std::vector<int>{0});
  CHECK_THROWS_AS(transposition_sequence({0, 0, 1}), Error);
  CHECK_THROWS_AS(transposition_sequence({0, 2}), Error);
}

TEST_CASE("transposition_sequence sorts and stays short") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      FactorOrder order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      const std::vector<int> seq = transposition_sequence(order);
      CHECK(seq.size() <= static_cast<std::size_t>(n * (n - 1) / 2));
      // Replay: sequence entry t swaps list positions n-2-t and n-1-t.
      FactorOrder replay = order;
      for (int t : seq) std::swap(replay[n - 2 - t], replay[n - 1 - t]);
      for (int i = 0; i < n; ++i) CHECK(replay[i] == n - 1 - i);
    }
  }
}

TEST_CASE("tau_matrix swaps adjacent index bits") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i + 2 <= n; ++i) {
      const DenseMatrix tau = tau_matrix(i, n);
      const std::size_t dim = std::size_t{1} << n;
      for (std::size_t x = 0; x < dim; ++x) {
        std::size_t y = x;
        const std::size_t a = (x >> i) & 1u;
        const std::size_t b = (x >> (i + 1)) & 1u;
        if (a != b) y ^= std::size_t{3} << i;
        for (std::size_t r = 0; r < dim; ++r) {
          CHECK(tau(r, x) == (r == y ? cdouble{1} : cdouble{}));
        }
      }
    }
  }
  CHECK(tau_matrix(0, 2) == *find_builtin("SWAP"));
  CHECK_THROWS_AS(tau_matrix(1, 2), Error);
  CHECK_THROWS_AS(tau_matrix(-1, 3), Error);
  CHECK_THROWS_AS(tau_matrix(0, 1), Error);
}

TEST_CASE("lift reproduces both CNOT matrices") {
  CHECK(equals_real_table(lift(builtin_app("CNOT", {1, 0}), 2), kCnotControl1));
  CHECK(equals_real_table(lift(builtin_app("CNOT", {0, 1}), 2), kCnotControl0));
}

TEST_CASE("lift of SWAP on (1,0) is tau_0") {
  CHECK(lift(builtin_app("SWAP", {1, 0}), 2) == tau_matrix(0, 2));
  // SWAP is symmetric in its arguments.
  CHECK(lift(builtin_app("SWAP", {0, 1}), 2) == tau_matrix(0, 2));
}

TEST_CASE("lift equals the dense product P pad Pdagger exactly") {
  // The permutation-index implementation must equal the matrix-product
  // definition entry for entry; permutations introduce no rounding.
  std::mt19937_64 rng(33);
  for (int n = 2; n <= 4; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const GateApplication app = builtin_app("CNOT", {a, b});
        CHECK(lift(app, n) == lift_by_matrix_products(app, n));
      }
      GateApplication h = builtin_app("H", {a});
      CHECK(lift(h, n) == lift_by_matrix_products(h, n));
      GateApplication u{"U", oracle::random_unitary(2, rng), {a}, 0};
      CHECK(lift(u, n) == lift_by_matrix_products(u, n));
    }
  }
}

TEST_CASE("lift equals the semantics oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (const NamedGate& g : builtin_gates()) {
      if (g.arity == 1) {
        for (int q = 0; q < n; ++q) {
          const GateApplication app{std::string(g.name), *g.matrix, {q}, 0};
          const double diff =
              oracle::max_abs_diff(lift(app, n), oracle::lifted_by_semantics(*g.matrix, {q}, n));
          CHECK(diff <= 1e-12);
        }
      } else if (n >= 2) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const GateApplication app{std::string(g.name), *g.matrix, {a, b}, 0};
            const double diff = oracle::max_abs_diff(
                lift(app, n), oracle::lifted_by_semantics(*g.matrix, {a, b}, n));
            CHECK(diff <= 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("lift of a three-qubit gate against the semantics oracle") {
  std::mt19937_64 rng(55);
  const DenseMatrix u = oracle::random_unitary(8, rng);
  const std::vector<int> qubits{3, 0, 2};
  const GateApplication app{"U3", u, qubits, 0};
  CHECK(oracle::max_abs_diff(lift(app, 4), oracle::lifted_by_semantics(u, qubits, 4)) <=
        1e-12);
}

TEST_CASE("lift preserves unitarity") {
  std::mt19937_64 rng(77);
  const GateApplication app{"U", oracle::random_unitary(4, rng), {2, 0}, 0};
  CHECK(is_unitary(lift(app, 3), 1e-10));
}

TEST_CASE("lift validation") {
  CHECK_THROWS_AS(lift(builtin_app("CNOT", {0, 0}), 2), Error);   // duplicate qubit
  CHECK_THROWS_AS(lift(builtin_app("CNOT", {0, 2}), 2), Error);   // label >= n
  CHECK_THROWS_AS(lift(builtin_app("CNOT", {0}), 2), Error);      // arity mismatch
  CHECK_THROWS_AS(lift(builtin_app("X", {0}), 13), Error);        // above dense cap
  CHECK_NOTHROW(lift(builtin_app("X", {0}), 12));
  GateApplication bad{"NAN", DenseMatrix::identity(2), {0}, 0};
  bad.matrix(0, 0) = cdouble{std::numeric_limits<double>::quiet_NaN(), 0};
  CHECK_THROWS_AS(lift(bad, 1), Error);
}

TEST_CASE("bubble and insertion sequences compose to the same permutation") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      FactorOrder order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      const auto bubble = transposition_sequence(order);
      const auto insertion = oracle::insertion_transposition_sequence(order);
      CHECK(oracle::permutation_of_sequence(bubble, n) ==
            oracle::permutation_of_sequence(insertion, n));
    }
  }
}

TEST_CASE("reinterpret reverses which qubit is control") {
  const DenseMatrix& cnot = *find_builtin("CNOT");
  const DenseMatrix& swap = *find_builtin("SWAP");
  const std::vector<int> order10{1, 0};
  const std::vector<int> order01{0, 1};
  const DenseMatrix flipped = reinterpret(cnot, order10, order01);
  CHECK(flipped == matmul(swap, matmul(cnot, swap)));
  CHECK(equals_real_table(flipped, kCnotControl0));
  // Round trip is the identity.
  CHECK(reinterpret(flipped, order01, order10) == cnot);
  // Same order: no change.
  CHECK(reinterpret(cnot, order10, order10) == cnot);
  CHECK_THROWS_AS(reinterpret(cnot, order10, std::vector<int>{0, 2}), Error);
}

TEST_CASE("reinterpret matches lift through both orderings") {
  // Lifting gate-as-written on (a,b) must equal lifting the reinterpreted
  // matrix on (b,a).
  std::mt19937_64 rng(13);
  const DenseMatrix u = oracle::random_unitary(4, rng);
  const std::vector<int> ab{2, 0};
  const std::vector<int> ba{0, 2};
  const GateApplication direct{"U", u, ab, 0};
  const GateApplication rewritten{"U", reinterpret(u, ab, ba), ba, 0};
  CHECK(oracle::max_abs_diff(lift(direct, 3), lift(rewritten, 3)) <= 1e-12);
}

}  // TEST_SUITE
