#include "ketsim/register.hpp"

#include <cmath>

#include "ketsim/format.hpp"
#include "ketsim/kernels.hpp"

namespace ketsim {

namespace {

void check_width(int n, int max_qubits) {
  if (max_qubits > kMaxIndexWidth) max_qubits = kMaxIndexWidth;
  if (n < 1 || n > max_qubits) {
    throw Error("state of " + std::to_string(n) + " qubits outside the allowed 1.." +
                std::to_string(max_qubits) + " (the cap can be raised explicitly)");
  }
}

void check_register(const Register& reg) {
  if (reg.n < 1 || reg.n > kMaxIndexWidth ||
      reg.amplitudes.size() != (std::size_t{1} << reg.n)) {
    throw Error("register amplitude count does not match its qubit count");
  }
}

}  // namespace

Register zero_state(int n, int max_qubits) {
  check_width(n, max_qubits);
  Register reg{n, DenseVector(std::size_t{1} << n)};
  reg.amplitudes[0] = 1.0;
  return reg;
}

Register make_register(int n, DenseVector amplitudes, int max_qubits) {
  check_width(n, max_qubits);
  Register reg{n, std::move(amplitudes)};
  check_register(reg);
  return reg;
}

void apply_gate_inplace(Register& reg, const GateApplication& app) {
  check_register(reg);
  validate_gate_application(app, reg.n);
  cdouble* amps = reg.amplitudes.data();
  const std::size_t dim = reg.amplitudes.size();
  const kernels::Backend backend = kernels::active_backend();
  switch (app.qubits.size()) {
    case 1:
      kernels::apply_1q(amps, dim, app.qubits[0], app.matrix.entries().data(), backend);
      break;
    case 2:
      kernels::apply_2q(amps, dim, app.qubits[0], app.qubits[1],
                        app.matrix.entries().data(), backend);
      break;
    default:
      kernels::apply_kq(amps, dim, app.qubits, app.matrix);
      break;
  }
}

Register apply_gate(Register reg, const GateApplication& app) {
  apply_gate_inplace(reg, app);
  return reg;
}

Register adjoin_left(Register reg, int k, int max_qubits) {
  check_register(reg);
  if (k < 0) throw Error("cannot adjoin a negative number of qubits");
  check_width(reg.n + k, max_qubits);
  reg.n += k;
  reg.amplitudes.resize(std::size_t{1} << reg.n);  // new amplitudes are zero
  return reg;
}

double squared_norm(const Register& reg) {
  check_register(reg);
  double total = 0;
  for (const cdouble& a : reg.amplitudes) total += std::norm(a);
  return total;
}

std::vector<double> probabilities(const Register& reg) {
  check_register(reg);
  std::vector<double> out(reg.amplitudes.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::norm(reg.amplitudes[i]);
  return out;
}

Register normalize(Register reg) {
  const double norm = std::sqrt(squared_norm(reg));
  if (!(norm > 0) || !std::isfinite(norm)) {
    throw Error("cannot normalize a zero or non-finite state");
  }
  for (cdouble& a : reg.amplitudes) a /= norm;
  return reg;
}

std::string dump_wavefunction(const Register& reg, const WavefunctionDumpOptions& opts) {
  check_register(reg);
  std::string out;
  for (std::size_t i = 0; i < reg.amplitudes.size(); ++i) {
    const cdouble a = reg.amplitudes[i];
    if (std::abs(a) <= opts.threshold) continue;
    out += format_ket(BasisIndex{i, reg.n}, opts.style, opts.ascii);
    out += ' ';
    out += format_complex(a);
    out += " p=";
    out += format_double(std::norm(a));
    out += '\n';
  }
  return out;
}

}  // namespace ketsim
