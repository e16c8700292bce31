#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ketsim/lifting.hpp"

namespace ketsim {

// Text-defined gates are kept small: a 64x64 block is already 4096 literals.
inline constexpr std::size_t kDefgateDimCap = 64;

struct Instruction {
  std::string name;
  std::vector<int> qubits;
  int line = 0;
};

struct GateDefinition {
  std::string name;
  DenseMatrix matrix;
  int line = 0;
};

struct Program {
  std::vector<GateDefinition> definitions;  // source order
  std::vector<Instruction> instructions;

  const GateDefinition* find_definition(std::string_view name) const;
};

// Grammar (see docs/grammar.ebnf): line-oriented; '#' starts a comment;
// blank lines are skipped; `NAME q...` is an instruction; `DEFGATE NAME:`
// opens an indented block of comma-separated complex literals. Instructions
// are checked against built-ins and definitions (forward references are
// fine), so unknown names, arity mismatches and duplicate qubit arguments
// are parse errors. Throws ParseError.
Program parse_program(std::string_view text);

// Ignores line numbers.
bool structurally_equal(const Program& a, const Program& b);

// Canonical text form; parses back to a structurally equal Program.
std::string format_program(const Program& program);

enum class UnitarityPolicy { warn, error };

struct ResolveOptions {
  std::optional<int> width;  // must be >= 1 + max qubit label
  UnitarityPolicy unitarity = UnitarityPolicy::warn;
  double unitary_tolerance = 1e-10;
};

struct ResolvedProgram {
  int width = 1;
  std::vector<GateApplication> applications;
  std::vector<std::string> warnings;  // unitarity complaints under the warn policy
};

// Binds every instruction to its matrix and fixes the register width
// (1 + max label unless widened). Throws ResolveError.
ResolvedProgram resolve(const Program& program, const ResolveOptions& options = {});

}  // namespace ketsim
