#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <random>

#include "ketsim/gates.hpp"
#include "ketsim/register.hpp"
#include "oracle.hpp"

using namespace ketsim;

namespace {

GateApplication builtin_app(const char* name, std::vector<int> qubits) {
  return GateApplication{name, *find_builtin(name), std::move(qubits), 0};
}

Register state_from(int n, DenseVector amps) { return make_register(n, std::move(amps)); }

}  // namespace

TEST_SUITE("apply") {

TEST_CASE("zero_state starts in |0...0>") {
  const Register reg = zero_state(3);
  REQUIRE(reg.amplitudes.size() == 8);
  CHECK(reg.amplitudes[0] == cdouble{1});
  for (std::size_t i = 1; i < 8; ++i) CHECK(reg.amplitudes[i] == cdouble{});
  CHECK_THROWS_AS(zero_state(0), Error);
  CHECK_THROWS_AS(zero_state(27), Error);      // default cap
  CHECK_THROWS_AS(zero_state(5, 4), Error);    // explicit cap
  CHECK_NOTHROW(zero_state(5, 5));
  CHECK_THROWS_AS(make_register(2, DenseVector(3)), Error);
}

TEST_CASE("X on qubit 3 of five excites |01000>") {
  Register reg = zero_state(5);
  apply_gate_inplace(reg, builtin_app("X", {3}));
  for (std::size_t i = 0; i < 32; ++i) {
    CHECK(reg.amplitudes[i] == (i == 8 ? cdouble{1} : cdouble{}));
  }
}

TEST_CASE("X then H makes the minus state") {
  Register reg = zero_state(1);
  apply_gate_inplace(reg, builtin_app("X", {0}));
  apply_gate_inplace(reg, builtin_app("H", {0}));
  const double s = 0.7071067811865476;  // closest double to 1/sqrt(2)
  CHECK(reg.amplitudes[0] == cdouble{s});
  CHECK(reg.amplitudes[1] == cdouble{-s});
}

TEST_CASE("CNOT truth table on two qubits") {
  // Control on qubit 1: |10> flips to |11>.
  Register reg = state_from(2, {0, 0, 1, 0});
  apply_gate_inplace(reg, builtin_app("CNOT", {1, 0}));
  CHECK(reg.amplitudes == DenseVector{0, 0, 0, 1});
  // Control on qubit 0: |10> has the control clear, nothing happens.
  reg = state_from(2, {0, 0, 1, 0});
  apply_gate_inplace(reg, builtin_app("CNOT", {0, 1}));
  CHECK(reg.amplitudes == DenseVector{0, 0, 1, 0});
  // ... and |01> flips to |11>.
  reg = state_from(2, {0, 1, 0, 0});
  apply_gate_inplace(reg, builtin_app("CNOT", {0, 1}));
  CHECK(reg.amplitudes == DenseVector{0, 0, 0, 1});
}

TEST_CASE("X 1 then CNOT 1 3 lands on |01010>") {
  Register reg = zero_state(5);
  apply_gate_inplace(reg, builtin_app("X", {1}));
  apply_gate_inplace(reg, builtin_app("CNOT", {1, 3}));
  for (std::size_t i = 0; i < 32; ++i) {
    CHECK(reg.amplitudes[i] == (i == 10 ? cdouble{1} : cdouble{}));
  }
}

TEST_CASE("apply_gate agrees with lift-then-matvec") {
  std::mt19937_64 rng(404);
  for (int n = 1; n <= 5; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (int trial = 0; trial < 10; ++trial) {
      const DenseVector state = oracle::random_state(dim, rng);
      GateApplication app;
      if (n >= 2 && trial % 2 == 0) {
        std::vector<int> qubits;
        for (int q = 0; q < n; ++q) qubits.push_back(q);
        std::shuffle(qubits.begin(), qubits.end(), rng);
        qubits.resize(2);
        app = GateApplication{"U2", oracle::random_unitary(4, rng), qubits, 0};
      } else {
        app = GateApplication{
            "U1", oracle::random_unitary(2, rng),
            {static_cast<int>(rng() % static_cast<unsigned>(n))}, 0};
      }
      const Register got = apply_gate(state_from(n, state), app);
      const DenseVector want = matvec(lift(app, n), state);
      CHECK(oracle::max_abs_diff(got.amplitudes, want) <= 1e-10);
    }
  }
}

TEST_CASE("three-qubit gates route through the generic kernel and match lift") {
  std::mt19937_64 rng(505);
  const DenseMatrix u = oracle::random_unitary(8, rng);
  const DenseVector state = oracle::random_state(32, rng);
  const GateApplication app{"U3", u, {4, 1, 2}, 0};
  const Register got = apply_gate(state_from(5, state), app);
  const DenseVector want = matvec(lift(app, 5), state);
  CHECK(oracle::max_abs_diff(got.amplitudes, want) <= 1e-10);
}

TEST_CASE("apply validation") {
  Register reg = zero_state(2);
  CHECK_THROWS_AS(apply_gate_inplace(reg, builtin_app("CNOT", {0, 0})), Error);
  CHECK_THROWS_AS(apply_gate_inplace(reg, builtin_app("X", {2})), Error);
  CHECK_THROWS_AS(apply_gate_inplace(reg, builtin_app("CNOT", {0})), Error);
}

TEST_CASE("adjoin_left keeps the amplitude prefix bit-identical") {
  Register minus = zero_state(1);
  apply_gate_inplace(minus, builtin_app("X", {0}));
  apply_gate_inplace(minus, builtin_app("H", {0}));
  const DenseVector before = minus.amplitudes;

  const Register grown = adjoin_left(std::move(minus), 1);
  CHECK(grown.n == 2);
  REQUIRE(grown.amplitudes.size() == 4);
  CHECK(std::memcmp(grown.amplitudes.data(), before.data(), before.size() * sizeof(cdouble)) ==
        0);
  CHECK(grown.amplitudes[2] == cdouble{});
  CHECK(grown.amplitudes[3] == cdouble{});

  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = static_cast<int>(rng() % 3);
    const DenseVector amps = oracle::random_state(std::size_t{1} << n, rng);
    const Register wide = adjoin_left(state_from(n, amps), k);
    CHECK(wide.n == n + k);
    CHECK(std::memcmp(wide.amplitudes.data(), amps.data(), amps.size() * sizeof(cdouble)) ==
          0);
    for (std::size_t i = amps.size(); i < wide.amplitudes.size(); ++i) {
      CHECK(wide.amplitudes[i] == cdouble{});
    }
  }

  CHECK_THROWS_AS(adjoin_left(zero_state(2), -1), Error);
  CHECK_THROWS_AS(adjoin_left(zero_state(2), 2, 3), Error);
  CHECK(adjoin_left(zero_state(2), 0).n == 2);
}

TEST_CASE("adjoining then applying to low qubits equals applying then adjoining") {
  std::mt19937_64 rng(707);
  const DenseVector amps = oracle::random_state(8, rng);
  const GateApplication app{"U", oracle::random_unitary(4, rng), {2, 0}, 0};
  const Register a = adjoin_left(apply_gate(state_from(3, amps), app), 2);
  const Register b = apply_gate(adjoin_left(state_from(3, amps), 2), app);
  CHECK(std::memcmp(a.amplitudes.data(), b.amplitudes.data(),
                    a.amplitudes.size() * sizeof(cdouble)) == 0);
}

TEST_CASE("probabilities and normalize") {
  Register reg = state_from(1, {cdouble{0.6}, cdouble{0, 0.8}});
  const std::vector<double> p = probabilities(reg);
  CHECK(p[0] == doctest::Approx(0.36));
  CHECK(p[1] == doctest::Approx(0.64));
  CHECK(squared_norm(reg) == doctest::Approx(1.0));

  Register unnormalized = state_from(1, {cdouble{3}, cdouble{4}});
  const Register unit = normalize(std::move(unnormalized));
  CHECK(squared_norm(unit) == doctest::Approx(1.0));
  CHECK(unit.amplitudes[0].real() == doctest::Approx(0.6));

  Register dead = state_from(1, {cdouble{}, cdouble{}});
  CHECK_THROWS_AS(normalize(std::move(dead)), Error);
}

TEST_CASE("dump_wavefunction formatting") {
  CHECK(dump_wavefunction(zero_state(1)) == "|0⟩ 1+0i p=1\n");

  Register reg = zero_state(5);
  apply_gate_inplace(reg, builtin_app("X", {3}));
  CHECK(dump_wavefunction(reg) == "|01000⟩ 1+0i p=1\n");

  WavefunctionDumpOptions ascii;
  ascii.ascii = true;
  CHECK(dump_wavefunction(reg, ascii) == "|01000> 1+0i p=1\n");

  WavefunctionDumpOptions decimal;
  decimal.style = KetStyle::decimal;
  CHECK(dump_wavefunction(reg, decimal) == "|8⟩ 1+0i p=1\n");

  // Threshold filters, ascending order, and no trailing junk.
  Register bell = zero_state(2);
  apply_gate_inplace(bell, builtin_app("H", {0}));
  apply_gate_inplace(bell, builtin_app("CNOT", {0, 1}));
  const std::string dump = dump_wavefunction(bell);
  CHECK(dump.find("|00⟩") == 0);
  CHECK(dump.find("|11⟩") != std::string::npos);
  CHECK(dump.find("|01⟩") == std::string::npos);
  WavefunctionDumpOptions strict;
  strict.threshold = 0.9;
  CHECK(dump_wavefunction(bell, strict).empty());
}

}  // TEST_SUITE
