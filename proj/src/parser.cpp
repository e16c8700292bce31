#include "ketsim/parser.hpp"

#include <algorithm>
#include <charconv>

#include "ketsim/format.hpp"
#include "ketsim/gates.hpp"
#include "ketsim/indexing.hpp"

namespace ketsim {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-';
}

bool valid_name(std::string_view s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_name_char);
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void fail(int line, int column, ErrorKind kind, std::string message,
                       std::string_view offending = {}) {
  throw ParseError(SourceError{line, column, kind, std::move(message),
                               std::string(offending)});
}

// Power-of-two with at least one qubit's worth of rows.
bool valid_gate_dim(std::size_t dim) { return dim >= 2 && (dim & (dim - 1)) == 0; }

struct PendingDefgate {
  std::string name;
  int header_line = 0;
  int header_column = 0;
  std::vector<std::vector<cdouble>> rows;
  std::vector<int> row_lines;
};

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : text_(text) {}

  Program run() {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t eol = text_.find('\n', pos);
      const std::size_t len = (eol == std::string_view::npos ? text_.size() : eol) - pos;
      std::string_view raw = text_.substr(pos, len);
      ++line_no;
      handle_line(line_no, raw);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    finish_defgate();
    bind_instructions();
    return std::move(program_);
  }

 private:
  void handle_line(int line_no, std::string_view raw) {
    std::string_view line = raw.substr(0, std::min(raw.size(), raw.find('#')));
    std::size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(0, last == std::string_view::npos ? 0 : last + 1);
    if (line.empty()) {
      finish_defgate();  // a blank line closes an open matrix block
      return;
    }
    const bool indented = is_space(line[0]);
    if (pending_) {
      if (indented) {
        matrix_row(line_no, line);
        return;
      }
      finish_defgate();
    }
    if (indented) {
      fail(line_no, 1, ErrorKind::syntax, "unexpected indentation outside DEFGATE");
    }
    const std::vector<Token> tokens = tokenize(line);
    if (tokens[0].text == "DEFGATE") {
      defgate_header(line_no, line, tokens);
    } else {
      instruction(line_no, tokens);
    }
  }

  void defgate_header(int line_no, std::string_view line, const std::vector<Token>& tokens) {
    if (tokens.size() < 2) {
      fail(line_no, static_cast<int>(line.size()) + 1, ErrorKind::syntax,
           "DEFGATE needs a name followed by ':'");
    }
    if (tokens.size() > 2) {
      fail(line_no, tokens[2].column, ErrorKind::syntax,
           "unexpected text after DEFGATE header", tokens[2].text);
    }
    std::string_view named = tokens[1].text;
    if (named.empty() || named.back() != ':') {
      fail(line_no, tokens[1].column, ErrorKind::syntax, "DEFGATE header must end with ':'",
           named);
    }
    named.remove_suffix(1);
    if (!valid_name(named)) {
      fail(line_no, tokens[1].column, ErrorKind::syntax, "invalid gate name", named);
    }
    if (find_builtin(named) != nullptr) {
      fail(line_no, tokens[1].column, ErrorKind::duplicate_definition,
           "DEFGATE shadows a built-in gate", named);
    }
    if (program_.find_definition(named) != nullptr) {
      fail(line_no, tokens[1].column, ErrorKind::duplicate_definition,
           "gate is already defined", named);
    }
    pending_.emplace();
    pending_->name = std::string(named);
    pending_->header_line = line_no;
    pending_->header_column = tokens[1].column;
  }

  void matrix_row(int line_no, std::string_view line) {
    std::vector<cdouble> row;
    std::size_t cell_start = 0;
    // One pass over "a, b, c": cells split on ',', each trimmed.
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i < line.size() && line[i] != ',') continue;
      std::size_t b = cell_start;
      std::size_t e = i;
      while (b < e && is_space(line[b])) ++b;
      while (e > b && is_space(line[e - 1])) --e;
      const std::string_view cell = line.substr(b, e - b);
      const int column = static_cast<int>(b) + 1;
      if (cell.empty()) {
        fail(line_no, column, ErrorKind::bad_complex_literal, "empty matrix entry");
      }
      const std::optional<cdouble> value = parse_complex_literal(cell);
      if (!value) {
        fail(line_no, column, ErrorKind::bad_complex_literal, "malformed complex literal",
             cell);
      }
      row.push_back(*value);
      cell_start = i + 1;
    }
    if (!pending_->rows.empty() && pending_->rows.front().size() != row.size()) {
      fail(line_no, 1, ErrorKind::bad_matrix_shape,
           "row has " + std::to_string(row.size()) + " entries, previous rows have " +
               std::to_string(pending_->rows.front().size()));
    }
    pending_->rows.push_back(std::move(row));
    pending_->row_lines.push_back(line_no);
  }

  void finish_defgate() {
    if (!pending_) return;
    PendingDefgate block = std::move(*pending_);
    pending_.reset();
    const std::size_t nrows = block.rows.size();
    if (nrows == 0) {
      fail(block.header_line, block.header_column, ErrorKind::bad_matrix_shape,
           "DEFGATE has no matrix rows", block.name);
    }
    const std::size_t ncols = block.rows.front().size();
    if (nrows != ncols) {
      fail(block.header_line, block.header_column, ErrorKind::bad_matrix_shape,
           "matrix is " + std::to_string(nrows) + "x" + std::to_string(ncols) +
               ", must be square",
           block.name);
    }
    if (!valid_gate_dim(nrows)) {
      fail(block.header_line, block.header_column, ErrorKind::bad_matrix_shape,
           "matrix dimension " + std::to_string(nrows) + " is not a power of two >= 2",
           block.name);
    }
    if (nrows > kDefgateDimCap) {
      fail(block.header_line, block.header_column, ErrorKind::bad_matrix_shape,
           "matrix dimension " + std::to_string(nrows) + " exceeds the DEFGATE cap of " +
               std::to_string(kDefgateDimCap),
           block.name);
    }
    DenseMatrix matrix(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
      for (std::size_t c = 0; c < ncols; ++c) matrix(r, c) = block.rows[r][c];
    }
    program_.definitions.push_back({std::move(block.name), std::move(matrix),
                                    block.header_line});
  }

  void instruction(int line_no, const std::vector<Token>& tokens) {
    const Token& name = tokens[0];
    if (!valid_name(name.text)) {
      fail(line_no, name.column, ErrorKind::syntax, "invalid instruction name", name.text);
    }
    Instruction inst;
    inst.name = std::string(name.text);
    inst.line = line_no;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      int value = 0;
      const char* begin = tok.text.data();
      const char* end = begin + tok.text.size();
      auto res = std::from_chars(begin, end, value);
      const bool all_digits =
          std::all_of(tok.text.begin(), tok.text.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (!all_digits || res.ec != std::errc{} || res.ptr != end || value < 0) {
        fail(line_no, tok.column, ErrorKind::bad_qubit,
             "qubit argument must be a non-negative integer", tok.text);
      }
      if (std::find(inst.qubits.begin(), inst.qubits.end(), value) != inst.qubits.end()) {
        fail(line_no, tok.column, ErrorKind::duplicate_qubit,
             "qubit " + std::to_string(value) + " appears twice in one instruction",
             tok.text);
      }
      inst.qubits.push_back(value);
    }
    instruction_columns_.push_back(name.column);
    program_.instructions.push_back(std::move(inst));
  }

  // Name and arity checks run after the whole text is read so definitions
  // may appear below their first use.
  void bind_instructions() {
    for (std::size_t i = 0; i < program_.instructions.size(); ++i) {
      const Instruction& inst = program_.instructions[i];
      const int column = instruction_columns_[i];
      const DenseMatrix* matrix = nullptr;
      if (const GateDefinition* def = program_.find_definition(inst.name)) {
        matrix = &def->matrix;
      } else {
        matrix = find_builtin(inst.name);
      }
      if (matrix == nullptr) {
        fail(inst.line, column, ErrorKind::unknown_gate,
             "unknown gate (not a built-in, no DEFGATE)", inst.name);
      }
      const int arity = gate_arity(*matrix);
      if (static_cast<int>(inst.qubits.size()) != arity) {
        fail(inst.line, column, ErrorKind::arity_mismatch,
             "gate '" + inst.name + "' takes " + std::to_string(arity) + " qubits, got " +
                 std::to_string(inst.qubits.size()));
      }
    }
  }

  std::string_view text_;
  Program program_;
  std::optional<PendingDefgate> pending_;
  std::vector<int> instruction_columns_;
};

}  // namespace

const GateDefinition* Program::find_definition(std::string_view name) const {
  for (const GateDefinition& def : definitions) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

Program parse_program(std::string_view text) { return ProgramParser(text).run(); }

bool structurally_equal(const Program& a, const Program& b) {
  if (a.definitions.size() != b.definitions.size() ||
      a.instructions.size() != b.instructions.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.definitions.size(); ++i) {
    if (a.definitions[i].name != b.definitions[i].name ||
        !(a.definitions[i].matrix == b.definitions[i].matrix)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.instructions.size(); ++i) {
    if (a.instructions[i].name != b.instructions[i].name ||
        a.instructions[i].qubits != b.instructions[i].qubits) {
      return false;
    }
  }
  return true;
}

std::string format_program(const Program& program) {
  std::string out;
  for (const GateDefinition& def : program.definitions) {
    out += "DEFGATE " + def.name + ":\n";
    for (std::size_t r = 0; r < def.matrix.rows(); ++r) {
      out += "    ";
      for (std::size_t c = 0; c < def.matrix.cols(); ++c) {
        if (c != 0) out += ", ";
        out += format_complex(def.matrix(r, c));
      }
      out += '\n';
    }
    out += '\n';
  }
  for (const Instruction& inst : program.instructions) {
    out += inst.name;
    for (int q : inst.qubits) out += ' ' + std::to_string(q);
    out += '\n';
  }
  return out;
}

ResolvedProgram resolve(const Program& program, const ResolveOptions& options) {
  ResolvedProgram out;
  int max_label = -1;
  std::vector<const GateDefinition*> used;

  for (const Instruction& inst : program.instructions) {
    const DenseMatrix* matrix = nullptr;
    if (const GateDefinition* def = program.find_definition(inst.name)) {
      matrix = &def->matrix;
      if (std::find(used.begin(), used.end(), def) == used.end()) used.push_back(def);
    } else {
      matrix = find_builtin(inst.name);
    }
    if (matrix == nullptr) {
      throw ResolveError("gate '" + inst.name + "' no longer resolves", inst.line);
    }
    for (int q : inst.qubits) max_label = std::max(max_label, q);
    out.applications.push_back({inst.name, *matrix, inst.qubits, inst.line});
  }

  const int required = max_label + 1 > 1 ? max_label + 1 : 1;
  if (required > kMaxIndexWidth) {
    throw ResolveError("program needs " + std::to_string(required) +
                       " qubits, above the index limit of " + std::to_string(kMaxIndexWidth));
  }
  out.width = required;
  if (options.width) {
    if (*options.width < required) {
      throw ResolveError("width override " + std::to_string(*options.width) +
                         " is below the required " + std::to_string(required));
    }
    if (*options.width > kMaxIndexWidth) {
      throw ResolveError("width override " + std::to_string(*options.width) +
                         " is above the index limit of " + std::to_string(kMaxIndexWidth));
    }
    out.width = *options.width;
  }

  for (const GateDefinition* def : used) {
    if (is_unitary(def->matrix, options.unitary_tolerance)) continue;
    const std::string note = "gate '" + def->name + "' is not unitary within " +
                             format_double(options.unitary_tolerance);
    if (options.unitarity == UnitarityPolicy::error) {
      throw ResolveError(note, def->line);
    }
    out.warnings.push_back(note);
  }
  return out;
}

}  // namespace ketsim
