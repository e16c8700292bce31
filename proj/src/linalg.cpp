#include "ketsim/linalg.hpp"

#include <cmath>

#include "ketsim/format.hpp"

namespace ketsim {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be nonzero");
  entries_.assign(rows * cols, cdouble{});
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

cdouble& DenseMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
  return entries_[r * cols_ + c];
}

const cdouble& DenseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
  return entries_[r * cols_ + c];
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b, std::size_t max_dim) {
  if (a.rows() == 0 || b.rows() == 0) throw Error("kron of empty matrix");
  if (a.rows() > max_dim / b.rows() || a.cols() > max_dim / b.cols()) {
    throw Error("kron result exceeds dense cap of " + std::to_string(max_dim));
  }
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const cdouble f = a(ra, ca);
      for (std::size_t rb = 0; rb < b.rows(); ++rb) {
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
        }
      }
    }
  }
  return out;
}

DenseVector kron(const DenseVector& a, const DenseVector& b, std::size_t max_dim) {
  if (a.empty() || b.empty()) throw Error("kron of empty vector");
  if (a.size() > max_dim / b.size()) {
    throw Error("kron result exceeds dense cap of " + std::to_string(max_dim));
  }
  DenseVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matmul shape mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cdouble acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

DenseVector matvec(const DenseMatrix& a, const DenseVector& v) {
  if (a.cols() != v.size()) throw Error("matvec shape mismatch");
  DenseVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cdouble acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

DenseMatrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t dim = perm.size();
  if (dim == 0) throw Error("empty permutation");
  std::vector<bool> seen(dim, false);
  for (std::size_t v : perm) {
    if (v >= dim || seen[v]) throw Error("not a permutation");
    seen[v] = true;
  }
  DenseMatrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out(perm[j], j) = 1.0;
  return out;
}

DenseMatrix dagger(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  }
  return out;
}

bool is_unitary(const DenseMatrix& m, double tolerance) {
  if (!m.is_square()) return false;
  const DenseMatrix product = matmul(dagger(m), m);
  for (std::size_t r = 0; r < product.rows(); ++r) {
    for (std::size_t c = 0; c < product.cols(); ++c) {
      const cdouble want = r == c ? cdouble{1.0} : cdouble{};
      if (std::abs(product(r, c) - want) > tolerance) return false;
    }
  }
  return true;
}

bool all_finite(const DenseMatrix& m) {
  for (const cdouble& z : m.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool all_finite(const DenseVector& v) {
  for (const cdouble& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

std::string dump_matrix(const DenseMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += ' ';
      out += format_complex(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace ketsim
