// Command-line front end: run programs, print lifted operator matrices,
// answer which qubits a ket excites. Data goes to stdout, diagnostics to
// stderr. Exit codes: 0 ok, 1 parse error, 2 resolve error, 3 runtime error,
// 66 unreadable input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ketsim/format.hpp"
#include "ketsim/gates.hpp"
#include "ketsim/indexing.hpp"
#include "ketsim/kernels.hpp"
#include "ketsim/lifting.hpp"
#include "ketsim/parser.hpp"
#include "ketsim/register.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitResolve = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitUnreadable = 66;

// Thrown for inputs we cannot even open; keeps 1/2/3 for program-level
// failures.
class UnreadableInput : public ketsim::Error {
 public:
  using ketsim::Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableInput("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw UnreadableInput("cannot read '" + path + "'");
  return buffer.str();
}

struct RunOptions {
  std::string file;
  std::optional<int> qubits;
  double threshold = 1e-12;
  bool decimal = false;
  bool ascii = false;
  bool strict_unitary = false;
  int max_state_qubits = ketsim::kDefaultStateQubitCap;
  std::string backend = "auto";
};

struct LiftOptions {
  std::string gate;
  std::vector<int> qubits;
  std::optional<int> width;
  bool strict_unitary = false;
  std::size_t max_dense = ketsim::kDenseDimCap;
};

struct TauOptions {
  int index = 0;
  int width = 2;
  std::size_t max_dense = ketsim::kDenseDimCap;
};

struct WhoOptions {
  std::string ket;
  int qubits = 0;  // only needed for decimal kets
};

void select_backend(const std::string& name) {
  if (name == "auto") return;
  using ketsim::kernels::Backend;
  Backend b;
  if (name == "scalar") {
    b = Backend::scalar;
  } else if (name == "avx2") {
    b = Backend::avx2;
  } else if (name == "neon") {
    b = Backend::neon;
  } else {
    throw ketsim::Error("unknown backend '" + name + "'");
  }
  ketsim::kernels::set_active_backend(b);
}

int cmd_run(const RunOptions& opt) {
  select_backend(opt.backend);
  const std::string text = read_input(opt.file);

  ketsim::Program program;
  try {
    program = ketsim::parse_program(text);
  } catch (const ketsim::ParseError& err) {
    std::fprintf(stderr, "ketsim: parse error: %s:%s\n", opt.file.c_str(), err.what());
    return kExitParse;
  }

  ketsim::ResolveOptions resolve_options;
  resolve_options.width = opt.qubits;
  resolve_options.unitarity = opt.strict_unitary ? ketsim::UnitarityPolicy::error
                                                 : ketsim::UnitarityPolicy::warn;
  ketsim::ResolvedProgram resolved = ketsim::resolve(program, resolve_options);
  for (const std::string& warning : resolved.warnings) {
    std::fprintf(stderr, "ketsim: warning: %s\n", warning.c_str());
  }

  ketsim::Register reg = ketsim::zero_state(resolved.width, opt.max_state_qubits);
  for (const ketsim::GateApplication& app : resolved.applications) {
    ketsim::apply_gate_inplace(reg, app);
  }

  ketsim::WavefunctionDumpOptions dump;
  dump.threshold = opt.threshold;
  dump.style = opt.decimal ? ketsim::KetStyle::decimal : ketsim::KetStyle::binary;
  dump.ascii = opt.ascii;
  std::fputs(ketsim::dump_wavefunction(reg, dump).c_str(), stdout);
  return 0;
}

int cmd_lift(const LiftOptions& opt) {
  ketsim::GateApplication app;
  app.qubits = opt.qubits;
  if (const ketsim::DenseMatrix* builtin = ketsim::find_builtin(opt.gate)) {
    app.name = opt.gate;
    app.matrix = *builtin;
  } else if (std::ifstream(opt.gate).good()) {
    ketsim::Program program;
    try {
      program = ketsim::parse_program(read_input(opt.gate));
    } catch (const ketsim::ParseError& err) {
      std::fprintf(stderr, "ketsim: parse error: %s:%s\n", opt.gate.c_str(), err.what());
      return kExitParse;
    }
    if (program.definitions.size() != 1) {
      throw ketsim::ResolveError("'" + opt.gate + "' must define exactly one gate, has " +
                                 std::to_string(program.definitions.size()));
    }
    app.name = program.definitions.front().name;
    app.matrix = program.definitions.front().matrix;
  } else {
    throw ketsim::ResolveError("unknown gate '" + opt.gate +
                               "' (not a built-in and not a readable DEFGATE file)");
  }

  if (!ketsim::is_unitary(app.matrix, 1e-10)) {
    const std::string note = "gate '" + app.name + "' is not unitary within 1e-10";
    if (opt.strict_unitary) throw ketsim::ResolveError(note);
    std::fprintf(stderr, "ketsim: warning: %s\n", note.c_str());
  }

  int width = 0;
  for (int q : app.qubits) width = std::max(width, q + 1);
  if (opt.width) width = *opt.width;
  if (width < 1) throw ketsim::Error("lift needs at least one qubit");

  const ketsim::DenseMatrix lifted = ketsim::lift(app, width, opt.max_dense);
  std::fputs(ketsim::dump_matrix(lifted).c_str(), stdout);
  return 0;
}

int cmd_tau(const TauOptions& opt) {
  const ketsim::DenseMatrix tau = ketsim::tau_matrix(opt.index, opt.width, opt.max_dense);
  std::fputs(ketsim::dump_matrix(tau).c_str(), stdout);
  return 0;
}

int cmd_who(const WhoOptions& opt) {
  ketsim::BasisIndex index;
  try {
    index = ketsim::parse_ket(opt.ket, opt.qubits);
  } catch (const ketsim::Error& err) {
    std::fprintf(stderr, "ketsim: parse error: %s\n", err.what());
    return kExitParse;
  }
  const std::vector<int> excited = ketsim::excited_qubits(index);
  std::string out;
  for (std::size_t i = 0; i < excited.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(excited[i]);
  }
  if (!out.empty()) {
    out += '\n';
    std::fputs(out.c_str(), stdout);
  }
  return 0;
}

int cmd_backends() {
  const ketsim::kernels::Backend active = ketsim::kernels::active_backend();
  for (ketsim::kernels::Backend b : ketsim::kernels::available_backends()) {
    std::printf("%s%s\n", ketsim::kernels::backend_name(b), b == active ? " (active)" : "");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"state-vector gate runner (qubit 0 is the least significant bit)"};
  app.require_subcommand(1);

  RunOptions run_options;
  CLI::App* run = app.add_subcommand("run", "run a program and dump the wavefunction");
  run->add_option("file", run_options.file, "program file, or - for stdin")->required();
  run->add_option("--qubits", run_options.qubits,
                  "register width (>= 1 + highest qubit used)");
  run->add_option("--threshold", run_options.threshold,
                  "hide amplitudes with magnitude <= this (default 1e-12)");
  run->add_flag("--decimal", run_options.decimal, "print kets as decimal indices");
  run->add_flag("--ascii", run_options.ascii, "close kets with '>' instead of U+27E9");
  run->add_flag("--strict-unitary", run_options.strict_unitary,
                "reject non-unitary DEFGATE matrices instead of warning");
  run->add_option("--max-state-qubits", run_options.max_state_qubits,
                  "raise or lower the state-size cap (default 26)");
  run->add_option("--backend", run_options.backend,
                  "amplitude kernel: auto, scalar, avx2, neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  LiftOptions lift_options;
  CLI::App* lift = app.add_subcommand("lift", "print a gate as a full-register matrix");
  lift->add_option("gate", lift_options.gate, "built-in gate name or DEFGATE file")
      ->required();
  lift->add_option("qubit", lift_options.qubits, "argument qubits, first is most significant")
      ->required();
  lift->add_option("--qubits", lift_options.width, "register width (default 1 + highest)");
  lift->add_flag("--strict-unitary", lift_options.strict_unitary,
                 "reject non-unitary gates instead of warning");
  lift->add_option("--max-dense", lift_options.max_dense,
                   "dense matrix dimension cap (default 4096)");

  TauOptions tau_options;
  CLI::App* tau = app.add_subcommand("tau", "print the adjacent-swap matrix tau_i on n qubits");
  tau->add_option("i", tau_options.index, "transposition index, 0 <= i <= n-2")->required();
  tau->add_option("n", tau_options.width, "register width")->required();
  tau->add_option("--max-dense", tau_options.max_dense,
                  "dense matrix dimension cap (default 4096)");

  WhoOptions who_options;
  CLI::App* who = app.add_subcommand("who", "list the excited qubits of a ket");
  who->add_option("ket", who_options.ket, "ket literal, e.g. '|01000>'")->required();
  who->add_option("--qubits", who_options.qubits, "width, required for decimal kets");

  CLI::App* backends = app.add_subcommand("backends", "list available amplitude kernels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_options);
    if (lift->parsed()) return cmd_lift(lift_options);
    if (tau->parsed()) return cmd_tau(tau_options);
    if (who->parsed()) return cmd_who(who_options);
    if (backends->parsed()) return cmd_backends();
  } catch (const UnreadableInput& err) {
    std::fprintf(stderr, "ketsim: %s\n", err.what());
    return kExitUnreadable;
  } catch (const ketsim::ParseError& err) {
    std::fprintf(stderr, "ketsim: parse error: %s\n", err.what());
    return kExitParse;
  } catch (const ketsim::ResolveError& err) {
    std::fprintf(stderr, "ketsim: resolve error: %s\n", err.what());
    return kExitResolve;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "ketsim: error: %s\n", err.what());
    return kExitRuntime;
  }
  return 0;
}
