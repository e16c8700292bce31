#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ketsim/types.hpp"

namespace ketsim {

// Dense operators are capped at 2^12 x 2^12; anything larger must go through
// the state-vector path, which never materializes a matrix.
inline constexpr std::size_t kDenseDimCap = std::size_t{1} << 12;

inline constexpr double kDefaultTolerance = 1e-12;

using DenseVector = std::vector<cdouble>;

// Row-major complex matrix. Throws on out-of-range access in at(); entries()
// gives the raw storage for tight loops.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cdouble& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  cdouble& at(std::size_t r, std::size_t c);
  const cdouble& at(std::size_t r, std::size_t c) const;

  std::span<cdouble> entries() { return entries_; }
  std::span<const cdouble> entries() const { return entries_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> entries_;
};

// Kronecker product; (a (x) b)[ra*bR + rb, ca*bC + cb] = a[ra,ca] * b[rb,cb].
// Throws when the result would exceed max_dim in either direction.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b,
                 std::size_t max_dim = kDenseDimCap);
DenseVector kron(const DenseVector& a, const DenseVector& b,
                 std::size_t max_dim = kDenseDimCap);

// Plain triple-loop product, k ascending, so results are deterministic.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseVector matvec(const DenseMatrix& a, const DenseVector& v);

// Column-stochastic 0/1 matrix sending e_j to e_perm[j]. perm must be a
// permutation of 0..perm.size()-1.
DenseMatrix permutation_matrix(std::span<const std::size_t> perm);

DenseMatrix dagger(const DenseMatrix& m);

// Max-norm test of M^dagger M = I.
bool is_unitary(const DenseMatrix& m, double tolerance = kDefaultTolerance);

bool all_finite(const DenseMatrix& m);
bool all_finite(const DenseVector& v);

// One text line per row, entries space-separated as a+bi.
std::string dump_matrix(const DenseMatrix& m);

}  // namespace ketsim
