#ifndef TILTLAB_MATRIX_HPP
#define TILTLAB_MATRIX_HPP

// Exact dense linear algebra over the rationals.
//
// Everything here is deterministic: pivots are always the first nonzero
// candidate in row-major scan order, and no magnitude-based heuristics are
// used, so repeated runs produce bit-identical results. Elimination is
// fraction-free (Bareiss) on an integer-scaled copy, with a final rational
// reduction pass; this keeps intermediate entries from exploding.
//
// The ground field is Q. For the representation-finite path algebras this
// library targets, every Hom/Ext dimension computed over Q agrees with the
// value over an algebraically closed field, so working rationally is sound
// for the supported inputs.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tiltlab {

using Int = boost::multiprecision::cpp_int;
// Canonical form (lowest terms, positive denominator) is maintained by the
// rational adaptor itself.
using Rat = boost::multiprecision::cpp_rational;

struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Row-major dense matrix. Zero-dimensional shapes (0 x m, m x 0) are legal
// and represent zero maps to/from the zero space.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * size_t(cols)) {
    if (rows < 0 || cols < 0) throw ContractViolation("matrix: negative dimension");
  }
  Matrix(int rows, int cols, std::vector<Rat> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != size_t(rows) * size_t(cols))
      throw ContractViolation("matrix: data size mismatch");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // Rows given as initializer-style nested vectors; convenience for tests.
  static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;

  // Horizontal / vertical concatenation.
  static Matrix hstack(const std::vector<Matrix>& parts, int rows);
  static Matrix vstack(const std::vector<Matrix>& parts, int cols);

  // Column selection, in the given order.
  Matrix columns(const std::vector<int>& idx) const;
  Matrix column(int c) const { return columns({c}); }

private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Reduced row echelon form together with the pivot columns, obtained by
// fraction-free elimination followed by a rational normalization pass.
struct Rref {
  Matrix r;
  std::vector<int> pivot_cols;  // ascending
  int rank() const { return int(pivot_cols.size()); }
};

Rref rref(const Matrix& m);

int rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}; column count is cols(m) - rank(m).
// Basis vectors are the canonical ones read off the RREF, ordered by
// ascending free column.
Matrix kernel_basis(const Matrix& m);

// One exact solution of m x = b with all free variables set to zero, or
// nullopt if the system is inconsistent. b may have several columns; the
// result then solves all right-hand sides simultaneously.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

// Change of basis onto a complement of the column span of `sub` inside an
// ambient space of dimension `ambient_dim`. Returns (projection, inclusion)
// with projection * sub = 0 and projection * inclusion = identity on the
// quotient coordinates. The complement coordinates are the non-pivot
// coordinates of the span, so the result is deterministic.
std::pair<Matrix, Matrix> image_complement_change_of_basis(const Matrix& sub, int ambient_dim);

// Basis of the column space: the pivot columns of m (echelon-selected,
// original column order preserved).
Matrix column_space_basis(const Matrix& m);

}  // namespace tiltlab

#endif
