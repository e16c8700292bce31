#pragma once

#include <string>
#include <vector>

#include "ketsim/indexing.hpp"
#include "ketsim/lifting.hpp"

namespace ketsim {

// States above this many qubits are refused unless the caller raises the cap
// explicitly (2^26 amplitudes is 1 GiB of doubles).
inline constexpr int kDefaultStateQubitCap = 26;

// An n-qubit state vector; amplitudes.size() == 2^n, index bit q is qubit q.
struct Register {
  int n = 1;
  DenseVector amplitudes;
};

Register zero_state(int n, int max_qubits = kDefaultStateQubitCap);

// Validates the amplitude count against n before wrapping.
Register make_register(int n, DenseVector amplitudes, int max_qubits = kDefaultStateQubitCap);

// Routes to the 1q/2q kernels or the generic gather/scatter path; never
// materializes the lifted matrix. Gate arity <= 2 uses the active SIMD
// backend.
void apply_gate_inplace(Register& reg, const GateApplication& app);
Register apply_gate(Register reg, const GateApplication& app);

// Grows the register by k new qubits in the |0> state on the most significant
// side. Existing amplitudes keep their positions byte for byte.
Register adjoin_left(Register reg, int k, int max_qubits = kDefaultStateQubitCap);

double squared_norm(const Register& reg);
std::vector<double> probabilities(const Register& reg);

// Scales to unit norm; throws on (numerically) zero states.
Register normalize(Register reg);

struct WavefunctionDumpOptions {
  double threshold = 1e-12;  // print entries with |amplitude| strictly above this
  KetStyle style = KetStyle::binary;
  bool ascii = false;
};

// One line per surviving amplitude, ascending basis index:
// |01000> 1+0i p=1
std::string dump_wavefunction(const Register& reg, const WavefunctionDumpOptions& opts = {});

}  // namespace ketsim
