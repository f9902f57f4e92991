#include "tiltlab/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace tiltlab {

namespace {

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int r = int(rows.size());
  int c = r == 0 ? 0 : int(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw ContractViolation("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const Rat& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ContractViolation("matrix product: inner dimension mismatch");
  Matrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) p.at(i, j) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix sum: shape mismatch");
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix diff: shape mismatch");
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
  return s;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix s(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
  return s;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, int rows) {
  int cols = 0;
  for (const Matrix& p : parts) {
    if (p.rows() != rows) throw ContractViolation("hstack: row count mismatch");
    cols += p.cols();
  }
  Matrix m(rows, cols);
  int off = 0;
  for (const Matrix& p : parts) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < p.cols(); ++j) m.at(i, off + j) = p.at(i, j);
    off += p.cols();
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, int cols) {
  int rows = 0;
  for (const Matrix& p : parts) {
    if (p.cols() != cols) throw ContractViolation("vstack: column count mismatch");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  int off = 0;
  for (const Matrix& p : parts) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < cols; ++j) m.at(off + i, j) = p.at(i, j);
    off += p.rows();
  }
  return m;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix m(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j) {
    if (idx[j] < 0 || idx[j] >= cols_) throw ContractViolation("columns: index out of range");
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

Rref rref(const Matrix& m) {
  const int nr = m.rows(), nc = m.cols();

  // Scale each row to integers; row scaling changes neither rank, pivots,
  // kernel, nor the final RREF.
  std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
  for (int i = 0; i < nr; ++i) {
    Int l = 1;
    for (int j = 0; j < nc; ++j) l = lcm_int(l, denominator(m.at(i, j)));
    for (int j = 0; j < nc; ++j) {
      const Rat& x = m.at(i, j);
      a[i][j] = numerator(x) * (l / denominator(x));
    }
  }

  // Bareiss fraction-free forward elimination. The pivot is the first row
  // (top to bottom) with a nonzero entry in the current column; columns are
  // scanned left to right.
  std::vector<int> pivot_cols;
  Int prev = 1;
  int pr = 0;  // next pivot row
  for (int pc = 0; pc < nc && pr < nr; ++pc) {
    int sel = -1;
    for (int i = pr; i < nr; ++i)
      if (a[i][pc] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[pr], a[sel]);
    for (int i = pr + 1; i < nr; ++i) {
      for (int j = pc + 1; j < nc; ++j)
        a[i][j] = (a[i][j] * a[pr][pc] - a[i][pc] * a[pr][j]) / prev;
      a[i][pc] = 0;
    }
    prev = a[pr][pc];
    pivot_cols.push_back(pc);
    ++pr;
  }

  // Final reduction: normalize pivots to 1 and clear above, over Q. The
  // rational constructor requires a positive denominator, so fold the sign
  // of the pivot into the numerator.
  Matrix r(nr, nc);
  for (int i = 0; i < int(pivot_cols.size()); ++i) {
    const Int& piv = a[i][pivot_cols[i]];
    for (int j = 0; j < nc; ++j)
      if (a[i][j] != 0) r.at(i, j) = piv < 0 ? Rat(-a[i][j], -piv) : Rat(a[i][j], piv);
  }
  for (int i = int(pivot_cols.size()) - 1; i >= 0; --i)
    for (int k = 0; k < i; ++k) {
      Rat f = r.at(k, pivot_cols[i]);
      if (f == 0) continue;
      for (int j = pivot_cols[i]; j < nc; ++j) r.at(k, j) -= f * r.at(i, j);
    }

  return Rref{std::move(r), std::move(pivot_cols)};
}

int rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  Rref e = rref(m);
  const int nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (int p : e.pivot_cols) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < nc; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Matrix k(nc, int(free_cols.size()));
  for (int fj = 0; fj < int(free_cols.size()); ++fj) {
    int f = free_cols[fj];
    k.at(f, fj) = 1;
    for (int i = 0; i < e.rank(); ++i) k.at(e.pivot_cols[i], fj) = -e.r.at(i, f);
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw ContractViolation("solve: right-hand side row mismatch");
  Matrix aug = Matrix::hstack({m, b}, m.rows());
  Rref e = rref(aug);
  for (int p : e.pivot_cols)
    if (p >= m.cols()) return std::nullopt;  // inconsistent

  Matrix x(m.cols(), b.cols());
  for (int i = 0; i < e.rank(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(e.pivot_cols[i], j) = e.r.at(i, m.cols() + j);
  return x;
}

std::pair<Matrix, Matrix> image_complement_change_of_basis(const Matrix& sub, int ambient_dim) {
  if (sub.rows() != ambient_dim)
    throw ContractViolation("image_complement: subspace rows differ from ambient dimension");
  Rref e = rref(sub.transposed());  // rows of e.r span the column space of sub
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : e.pivot_cols) is_pivot[p] = true;
  std::vector<int> free_coords;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free_coords.push_back(j);

  const int q = int(free_coords.size());
  // Modulo the span, e_p = -sum_f R[row(p)][f] e_f for each pivot coordinate p.
  Matrix proj(q, ambient_dim);
  for (int k = 0; k < q; ++k) {
    proj.at(k, free_coords[k]) = 1;
    for (int i = 0; i < e.rank(); ++i) proj.at(k, e.pivot_cols[i]) = -e.r.at(i, free_coords[k]);
  }
  Matrix incl(ambient_dim, q);
  for (int k = 0; k < q; ++k) incl.at(free_coords[k], k) = 1;
  return {std::move(proj), std::move(incl)};
}

Matrix column_space_basis(const Matrix& m) {
  Rref e = rref(m);
  return m.columns(e.pivot_cols);
}

}  // namespace tiltlab
