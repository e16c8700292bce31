#include "ketsim/gates.hpp"

#include <array>

namespace ketsim {

namespace {

DenseMatrix make2(cdouble a, cdouble b, cdouble c, cdouble d) {
  DenseMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

DenseMatrix make4(std::array<cdouble, 16> entries) {
  DenseMatrix m(4, 4);
  for (std::size_t i = 0; i < 16; ++i) m(i / 4, i % 4) = entries[i];
  return m;
}

const DenseMatrix& gate_identity() {
  static const DenseMatrix m = make2(1, 0, 0, 1);
  return m;
}

const DenseMatrix& gate_x() {
  static const DenseMatrix m = make2(0, 1, 1, 0);
  return m;
}

const DenseMatrix& gate_y() {
  static const DenseMatrix m = make2(0, cdouble{0, -1}, cdouble{0, 1}, 0);
  return m;
}

const DenseMatrix& gate_z() {
  static const DenseMatrix m = make2(1, 0, 0, -1);
  return m;
}

const DenseMatrix& gate_h() {
  // Correctly rounded 1/sqrt(2); 1.0/std::sqrt(2.0) lands one ulp low.
  constexpr double s = 0.70710678118654752440;
  static const DenseMatrix m = make2(s, s, s, -s);
  return m;
}

const DenseMatrix& gate_cnot() {
  static const DenseMatrix m = make4({1, 0, 0, 0,  //
                                      0, 1, 0, 0,  //
                                      0, 0, 0, 1,  //
                                      0, 0, 1, 0});
  return m;
}

const DenseMatrix& gate_swap() {
  static const DenseMatrix m = make4({1, 0, 0, 0,  //
                                      0, 0, 1, 0,  //
                                      0, 1, 0, 0,  //
                                      0, 0, 0, 1});
  return m;
}

const DenseMatrix& gate_cz() {
  static const DenseMatrix m = make4({1, 0, 0, 0,  //
                                      0, 1, 0, 0,  //
                                      0, 0, 1, 0,  //
                                      0, 0, 0, -1});
  return m;
}

}  // namespace

std::span<const NamedGate> builtin_gates() {
  static const NamedGate table[] = {
      {"I", 1, &gate_identity()}, {"X", 1, &gate_x()},    {"Y", 1, &gate_y()},
      {"Z", 1, &gate_z()},        {"H", 1, &gate_h()},    {"CNOT", 2, &gate_cnot()},
      {"SWAP", 2, &gate_swap()},  {"CZ", 2, &gate_cz()},
  };
  return table;
}

const DenseMatrix* find_builtin(std::string_view name) {
  for (const NamedGate& g : builtin_gates()) {
    if (g.name == name) return g.matrix;
  }
  return nullptr;
}

}  // namespace ketsim
