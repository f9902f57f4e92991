#include "tiltlab/representation.hpp"

#include <algorithm>
#include <numeric>

namespace tiltlab {

Representation zero_rep(const Quiver& q) {
  Representation m;
  m.dims.assign(q.n, 0);
  for (size_t k = 0; k < q.arrows.size(); ++k) m.mats.emplace_back(0, 0);
  return m;
}

bool is_zero_rep(const Representation& m) {
  return std::all_of(m.dims.begin(), m.dims.end(), [](int d) { return d == 0; });
}

int total_dim(const Representation& m) {
  return std::accumulate(m.dims.begin(), m.dims.end(), 0);
}

void validate_representation(const Quiver& q, const Representation& m) {
  if (int(m.dims.size()) != q.n) throw ContractViolation("representation: dims length mismatch");
  if (m.mats.size() != q.arrows.size())
    throw ContractViolation("representation: arrow matrix count mismatch");
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    if (m.mats[k].rows() != m.dims[a.dst - 1] || m.mats[k].cols() != m.dims[a.src - 1])
      throw ContractViolation("representation: arrow matrix shape mismatch");
  }
  for (int d : m.dims)
    if (d < 0) throw ContractViolation("representation: negative dimension");
}

bool is_morphism(const Quiver& q, const Representation& m, const Representation& n,
                 const Morphism& f) {
  if (int(f.comps.size()) != q.n) return false;
  for (int v = 0; v < q.n; ++v)
    if (f.comps[v].rows() != n.dims[v] || f.comps[v].cols() != m.dims[v]) return false;
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    if (n.mats[k] * f.comps[a.src - 1] != f.comps[a.dst - 1] * m.mats[k]) return false;
  }
  return true;
}

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b) {
  Representation s;
  s.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) s.dims[v] = a.dims[v] + b.dims[v];
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& ar = q.arrows[k];
    Matrix mat(s.dims[ar.dst - 1], s.dims[ar.src - 1]);
    for (int i = 0; i < a.mats[k].rows(); ++i)
      for (int j = 0; j < a.mats[k].cols(); ++j) mat.at(i, j) = a.mats[k].at(i, j);
    int ro = a.dims[ar.dst - 1], co = a.dims[ar.src - 1];
    for (int i = 0; i < b.mats[k].rows(); ++i)
      for (int j = 0; j < b.mats[k].cols(); ++j) mat.at(ro + i, co + j) = b.mats[k].at(i, j);
    s.mats.push_back(std::move(mat));
  }
  return s;
}

Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
  Representation s = zero_rep(q);
  for (const Representation& p : parts) s = direct_sum(q, s, p);
  return s;
}

namespace {

// The block commutation system delta: (f_v)_v |-> (N_a f_src - f_dst M_a)_a,
// with unknowns vec'd row-major per vertex. Hom(M, N) is its kernel and
// Ext^1(M, N) its cokernel.
struct BlockSystem {
  Matrix mat;
  std::vector<int> col_off;  // per vertex, into the unknown vector
  std::vector<int> row_off;  // per arrow, into the equation vector
  int total_cols = 0;
  int total_rows = 0;
};

BlockSystem commutation_system(const Quiver& q, const Representation& m,
                               const Representation& n) {
  BlockSystem s;
  s.col_off.resize(q.n);
  for (int v = 0; v < q.n; ++v) {
    s.col_off[v] = s.total_cols;
    s.total_cols += n.dims[v] * m.dims[v];
  }
  s.row_off.resize(q.arrows.size());
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    s.row_off[k] = s.total_rows;
    s.total_rows += n.dims[a.dst - 1] * m.dims[a.src - 1];
  }

  s.mat = Matrix(s.total_rows, s.total_cols);
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    const int i = a.src - 1, j = a.dst - 1;
    const Matrix& na = n.mats[k];
    const Matrix& ma = m.mats[k];
    // Equation block (r, c) with r over dimN_j, c over dimM_i.
    for (int r = 0; r < n.dims[j]; ++r)
      for (int c = 0; c < m.dims[i]; ++c) {
        int row = s.row_off[k] + r * m.dims[i] + c;
        for (int t = 0; t < n.dims[i]; ++t)
          if (na.at(r, t) != 0) s.mat.at(row, s.col_off[i] + t * m.dims[i] + c) += na.at(r, t);
        for (int t = 0; t < m.dims[j]; ++t)
          if (ma.at(t, c) != 0) s.mat.at(row, s.col_off[j] + r * m.dims[j] + t) -= ma.at(t, c);
      }
  }
  return s;
}

}  // namespace

std::vector<Morphism> hom_basis(const Quiver& q, const Representation& m,
                                const Representation& n) {
  BlockSystem s = commutation_system(q, m, n);
  Matrix k = kernel_basis(s.mat);
  std::vector<Morphism> basis;
  basis.reserve(k.cols());
  for (int col = 0; col < k.cols(); ++col) {
    Morphism f;
    f.comps.reserve(q.n);
    for (int v = 0; v < q.n; ++v) {
      Matrix comp(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) comp.at(r, c) = k.at(s.col_off[v] + r * m.dims[v] + c, col);
      f.comps.push_back(std::move(comp));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const Quiver& q, const Representation& m, const Representation& n) {
  BlockSystem s = commutation_system(q, m, n);
  return s.total_cols - rank(s.mat);
}

Ext1 ext1(const Quiver& q, const Representation& m, const Representation& n) {
  BlockSystem s = commutation_system(q, m, n);
  Matrix image = column_space_basis(s.mat);
  auto [proj, incl] = image_complement_change_of_basis(image, s.total_rows);
  (void)proj;

  Ext1 e;
  e.dim = incl.cols();
  e.cocycles.resize(e.dim);
  for (int k = 0; k < e.dim; ++k) {
    // incl column k is a standard basis vector representing a cokernel basis
    // class; unpack it into per-arrow blocks.
    e.cocycles[k].reserve(q.arrows.size());
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      const Arrow& ar = q.arrows[a];
      const int i = ar.src - 1, j = ar.dst - 1;
      Matrix z(n.dims[j], m.dims[i]);
      for (int r = 0; r < n.dims[j]; ++r)
        for (int c = 0; c < m.dims[i]; ++c) z.at(r, c) = incl.at(s.row_off[a] + r * m.dims[i] + c, k);
      e.cocycles[k].push_back(std::move(z));
    }
  }
  return e;
}

int ext_dim(const Quiver& q, const Representation& m, const Representation& n) {
  BlockSystem s = commutation_system(q, m, n);
  return s.total_rows - rank(s.mat);
}

Subrep trace(const Quiver& q, const Representation& u, const Representation& m) {
  std::vector<Morphism> homs = hom_basis(q, u, m);
  Subrep w;
  w.bases.reserve(q.n);
  for (int v = 0; v < q.n; ++v) {
    std::vector<Matrix> cols;
    for (const Morphism& f : homs) cols.push_back(f.comps[v]);
    Matrix stacked = cols.empty() ? Matrix(m.dims[v], 0) : Matrix::hstack(cols, m.dims[v]);
    w.bases.push_back(column_space_basis(stacked));
  }
  return w;
}

Subrep reject(const Quiver& q, const Representation& u, const Representation& m) {
  std::vector<Morphism> homs = hom_basis(q, m, u);
  Subrep w;
  w.bases.reserve(q.n);
  for (int v = 0; v < q.n; ++v) {
    std::vector<Matrix> rows;
    for (const Morphism& f : homs) rows.push_back(f.comps[v]);
    Matrix stacked = rows.empty() ? Matrix(0, m.dims[v]) : Matrix::vstack(rows, m.dims[v]);
    w.bases.push_back(kernel_basis(stacked));
  }
  return w;
}

std::pair<Representation, Morphism> quotient(const Quiver& q, const Representation& m,
                                             const Subrep& w) {
  std::vector<Matrix> projs(q.n), incls(q.n);
  Representation quo;
  quo.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) {
    auto [p, i] = image_complement_change_of_basis(w.bases[v], m.dims[v]);
    quo.dims[v] = p.rows();
    projs[v] = std::move(p);
    incls[v] = std::move(i);
  }
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    quo.mats.push_back(projs[a.dst - 1] * m.mats[k] * incls[a.src - 1]);
  }
  Morphism proj;
  proj.comps = std::move(projs);
  return {std::move(quo), std::move(proj)};
}

Representation sub_rep(const Quiver& q, const Representation& m, const Subrep& w) {
  Representation s;
  s.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) s.dims[v] = w.bases[v].cols();
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    auto x = solve(w.bases[a.dst - 1], m.mats[k] * w.bases[a.src - 1]);
    if (!x) throw ContractViolation("sub_rep: subspaces are not arrow-closed");
    s.mats.push_back(std::move(*x));
  }
  return s;
}

bool is_generated_by(const Quiver& q, const Representation& m, const Representation& x) {
  Subrep t = trace(q, x, m);
  for (int v = 0; v < q.n; ++v)
    if (t.bases[v].cols() != m.dims[v]) return false;
  return true;
}

bool is_cogenerated_by(const Quiver& q, const Representation& m, const Representation& x) {
  Subrep r = reject(q, x, m);
  for (int v = 0; v < q.n; ++v)
    if (r.bases[v].cols() != 0) return false;
  return true;
}

namespace {

// Stable (Fitting) splitting along f^d, d = total dimension: both the kernel
// and image of the stabilized power are subrepresentations, and they sum
// directly to M. Returns false if f^d is zero or invertible.
bool fitting_split(const Quiver& q, const Representation& m, const Morphism& f,
                   Representation& ker_part, Representation& im_part) {
  const int d = total_dim(m);
  Subrep ker, im;
  ker.bases.resize(q.n);
  im.bases.resize(q.n);
  int kdim = 0, idim = 0;
  for (int v = 0; v < q.n; ++v) {
    Matrix p = Matrix::identity(m.dims[v]);
    for (int t = 0; t < d; ++t) p = p * f.comps[v];
    ker.bases[v] = kernel_basis(p);
    im.bases[v] = column_space_basis(p);
    kdim += ker.bases[v].cols();
    idim += im.bases[v].cols();
  }
  if (kdim == 0 || idim == 0) return false;
  ker_part = sub_rep(q, m, ker);
  im_part = sub_rep(q, m, im);
  return true;
}

void decompose_into(const Quiver& q, const Representation& m, std::vector<Representation>& out) {
  if (is_zero_rep(m)) return;

  std::vector<Morphism> endos = hom_basis(q, m, m);
  const int d = total_dim(m);

  // Candidate endomorphisms: each basis element, then a fixed family of
  // integer combinations (powers of c as coefficients) that separates any
  // product-of-fields quotient of End(M) at this scale.
  std::vector<Morphism> candidates = endos;
  for (int c = 2; c <= d + 1; ++c) {
    Morphism comb;
    comb.comps.resize(q.n);
    for (int v = 0; v < q.n; ++v) comb.comps[v] = Matrix(m.dims[v], m.dims[v]);
    Rat coeff = 1;
    for (const Morphism& e : endos) {
      for (int v = 0; v < q.n; ++v) comb.comps[v] = comb.comps[v] + e.comps[v].scaled(coeff);
      coeff *= c;
    }
    candidates.push_back(std::move(comb));
  }

  for (const Morphism& f : candidates) {
    Representation ker_part, im_part;
    if (fitting_split(q, m, f, ker_part, im_part)) {
      decompose_into(q, ker_part, out);
      decompose_into(q, im_part, out);
      return;
    }
  }
  out.push_back(m);  // no candidate splits: indecomposable
}

}  // namespace

std::vector<Representation> decompose(const Quiver& q, const Representation& m) {
  std::vector<Representation> out;
  decompose_into(q, m, out);
  return out;
}

bool is_iso(const Quiver& q, const Representation& a, const Representation& b) {
  if (a.dims != b.dims) return false;
  std::vector<DimVector> da, db;
  for (const Representation& p : decompose(q, a)) da.push_back(p.dims);
  for (const Representation& p : decompose(q, b)) db.push_back(p.dims);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

UniversalExtension universal_extension(const Quiver& q, const Representation& n,
                                       const Representation& u) {
  Ext1 e = ext1(q, n, u);
  if (e.dim == 0) return UniversalExtension{n, 0};

  const int r = e.dim;
  Representation m;
  m.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) m.dims[v] = r * u.dims[v] + n.dims[v];
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    const int i = a.src - 1, j = a.dst - 1;
    Matrix mat(m.dims[j], m.dims[i]);
    // r diagonal copies of U_a, the stacked cocycle blocks, then N_a.
    for (int copy = 0; copy < r; ++copy) {
      const Matrix& ua = u.mats[k];
      for (int rr = 0; rr < ua.rows(); ++rr)
        for (int cc = 0; cc < ua.cols(); ++cc)
          mat.at(copy * u.dims[j] + rr, copy * u.dims[i] + cc) = ua.at(rr, cc);
      const Matrix& z = e.cocycles[copy][k];
      for (int rr = 0; rr < z.rows(); ++rr)
        for (int cc = 0; cc < z.cols(); ++cc)
          mat.at(copy * u.dims[j] + rr, r * u.dims[i] + cc) = z.at(rr, cc);
    }
    const Matrix& na = n.mats[k];
    for (int rr = 0; rr < na.rows(); ++rr)
      for (int cc = 0; cc < na.cols(); ++cc)
        mat.at(r * u.dims[j] + rr, r * u.dims[i] + cc) = na.at(rr, cc);
    m.mats.push_back(std::move(mat));
  }
  return UniversalExtension{std::move(m), r};
}

TraceSequence trace_sequence(const Quiver& q, const Representation& x, const Representation& m) {
  TraceSequence s;
  s.sub = trace(q, x, m);
  auto [quo, proj] = quotient(q, m, s.sub);
  s.quot = std::move(quo);
  s.proj = std::move(proj);
  return s;
}

TraceSequence reject_sequence(const Quiver& q, const Representation& x, const Representation& m) {
  TraceSequence s;
  s.sub = reject(q, x, m);
  auto [quo, proj] = quotient(q, m, s.sub);
  s.quot = std::move(quo);
  s.proj = std::move(proj);
  return s;
}

}  // namespace tiltlab
