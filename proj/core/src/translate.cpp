#include "tiltlab/translate.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace tiltlab {

Representation dual(const Quiver& q, const Representation& m) {
  Representation d;
  d.dims = m.dims;
  d.mats.reserve(m.mats.size());
  for (const Matrix& a : m.mats) d.mats.push_back(a.transposed());
  (void)q;
  return d;
}

namespace {

Matrix apply_path(const Representation& m, const Path& p, Matrix vec) {
  for (int k : p) vec = m.mats[k] * vec;
  return vec;
}

// A minimal projective cover pi: P0 -> M. Summands are listed vertex by
// vertex; offsets[s][w] locates summand s's path basis inside P0 at vertex w.
struct Cover {
  std::vector<int> summand_vertex;  // 1-based vertex per summand
  Representation p0;
  Morphism pi;
  std::vector<std::vector<int>> offsets;
};

Cover projective_cover(const Quiver& q, const Representation& m) {
  Cover c;

  // Generators: coordinate representatives of top(M) = M / rad(M), where
  // rad(M) at v is the span of all incoming arrow images.
  std::vector<Matrix> gens(q.n);  // columns are generators in M_v
  for (int v = 0; v < q.n; ++v) {
    std::vector<Matrix> incoming;
    for (size_t k = 0; k < q.arrows.size(); ++k)
      if (q.arrows[k].dst == v + 1) incoming.push_back(m.mats[k]);
    Matrix rad = incoming.empty() ? Matrix(m.dims[v], 0)
                                  : column_space_basis(Matrix::hstack(incoming, m.dims[v]));
    auto [proj, incl] = image_complement_change_of_basis(rad, m.dims[v]);
    (void)proj;
    gens[v] = incl;
    for (int copy = 0; copy < incl.cols(); ++copy) c.summand_vertex.push_back(v + 1);
  }

  std::vector<Representation> projs(q.n);
  for (int v = 0; v < q.n; ++v) projs[v] = projective_rep(q, v + 1);

  c.offsets.resize(c.summand_vertex.size(), std::vector<int>(q.n, 0));
  c.p0 = zero_rep(q);
  for (size_t s = 0; s < c.summand_vertex.size(); ++s) {
    for (int w = 0; w < q.n; ++w) c.offsets[s][w] = c.p0.dims[w];
    c.p0 = direct_sum(q, c.p0, projs[c.summand_vertex[s] - 1]);
  }

  // Basis paths of P(v) at w are paths_between(q, v, w) in order; the cover
  // sends path p in the summand with generator g to the action of p on g.
  std::vector<int> copy_within(q.n, 0);
  c.pi.comps.resize(q.n);
  for (int w = 0; w < q.n; ++w) c.pi.comps[w] = Matrix(m.dims[w], c.p0.dims[w]);
  for (size_t s = 0; s < c.summand_vertex.size(); ++s) {
    const int v = c.summand_vertex[s];
    Matrix g(m.dims[v - 1], 1);
    for (int r = 0; r < g.rows(); ++r) g.at(r, 0) = gens[v - 1].at(r, copy_within[v - 1]);
    ++copy_within[v - 1];
    for (int w = 0; w < q.n; ++w) {
      std::vector<Path> paths = paths_between(q, v, w + 1);
      for (size_t pi_idx = 0; pi_idx < paths.size(); ++pi_idx) {
        Matrix img = apply_path(m, paths[pi_idx], g);
        for (int r = 0; r < m.dims[w]; ++r)
          c.pi.comps[w].at(r, c.offsets[s][w] + int(pi_idx)) = img.at(r, 0);
      }
    }
  }
  return c;
}

}  // namespace

Representation transpose(const Quiver& q, const Representation& m) {
  const Quiver qop = opposite(q);
  Cover c0 = projective_cover(q, m);

  Subrep ker;
  ker.bases.resize(q.n);
  for (int w = 0; w < q.n; ++w) ker.bases[w] = kernel_basis(c0.pi.comps[w]);
  Representation k = sub_rep(q, c0.p0, ker);
  Cover c1 = projective_cover(q, k);

  // Presentation entries: the generator of summand alpha = P(w) of P1 maps
  // into P0, and its coordinates within summand beta = P(v) are exactly the
  // coefficients of a path combination v ~> w.
  struct Entry {
    std::vector<std::pair<Path, Rat>> combo;
  };
  const size_t n0 = c0.summand_vertex.size(), n1 = c1.summand_vertex.size();
  std::vector<std::vector<Entry>> pres(n0, std::vector<Entry>(n1));
  {
    // Summand alpha's generator in K is the column of c1.pi at the basis
    // path of length zero.
    for (size_t alpha = 0; alpha < n1; ++alpha) {
      const int w = c1.summand_vertex[alpha];
      // The empty path v ~> v is always first in the lex order.
      int col = c1.offsets[alpha][w - 1];
      Matrix g_in_k(k.dims[w - 1], 1);
      for (int r = 0; r < k.dims[w - 1]; ++r) g_in_k.at(r, 0) = c1.pi.comps[w - 1].at(r, col);
      Matrix u = ker.bases[w - 1] * g_in_k;  // coordinates in P0 at vertex w
      for (size_t beta = 0; beta < n0; ++beta) {
        const int v = c0.summand_vertex[beta];
        std::vector<Path> paths = paths_between(q, v, w);
        Entry e;
        for (size_t p = 0; p < paths.size(); ++p) {
          Rat coeff = u.at(c0.offsets[beta][w - 1] + int(p), 0);
          if (coeff != 0) e.combo.emplace_back(paths[p], coeff);
        }
        pres[beta][alpha] = std::move(e);
      }
    }
  }

  // Apply Hom(-, Lambda): opposite-side projectives with the transposed
  // path matrix. A path p: v ~> w acts P^op(v) -> P^op(w) by prepending the
  // reversed path.
  std::vector<Representation> projs_op(q.n);
  for (int v = 0; v < q.n; ++v) projs_op[v] = projective_rep(qop, v + 1);

  Representation p0op = zero_rep(qop), p1op = zero_rep(qop);
  std::vector<std::vector<int>> off0(n0, std::vector<int>(q.n, 0)),
      off1(n1, std::vector<int>(q.n, 0));
  for (size_t beta = 0; beta < n0; ++beta) {
    for (int x = 0; x < q.n; ++x) off0[beta][x] = p0op.dims[x];
    p0op = direct_sum(qop, p0op, projs_op[c0.summand_vertex[beta] - 1]);
  }
  for (size_t alpha = 0; alpha < n1; ++alpha) {
    for (int x = 0; x < q.n; ++x) off1[alpha][x] = p1op.dims[x];
    p1op = direct_sum(qop, p1op, projs_op[c1.summand_vertex[alpha] - 1]);
  }

  Morphism g;
  g.comps.resize(q.n);
  for (int x = 0; x < q.n; ++x) g.comps[x] = Matrix(p1op.dims[x], p0op.dims[x]);
  for (size_t beta = 0; beta < n0; ++beta) {
    const int v = c0.summand_vertex[beta];
    for (size_t alpha = 0; alpha < n1; ++alpha) {
      const int w = c1.summand_vertex[alpha];
      for (const auto& [path, coeff] : pres[beta][alpha].combo) {
        Path rev(path.rbegin(), path.rend());
        for (int x = 0; x < q.n; ++x) {
          std::vector<Path> src_paths = paths_between(qop, v, x + 1);
          std::vector<Path> dst_paths = paths_between(qop, w, x + 1);
          for (size_t sp = 0; sp < src_paths.size(); ++sp) {
            Path composed = rev;
            composed.insert(composed.end(), src_paths[sp].begin(), src_paths[sp].end());
            auto it = std::find(dst_paths.begin(), dst_paths.end(), composed);
            if (it == dst_paths.end())
              throw ContractViolation("transpose: composed path missing from basis");
            int row = off1[alpha][x] + int(it - dst_paths.begin());
            int col = off0[beta][x] + int(sp);
            g.comps[x].at(row, col) += coeff;
          }
        }
      }
    }
  }

  Subrep image;
  image.bases.resize(q.n);
  for (int x = 0; x < q.n; ++x) image.bases[x] = column_space_basis(g.comps[x]);
  auto [tr, proj] = quotient(qop, p1op, image);
  (void)proj;
  return tr;
}

Representation tau(const Quiver& q, const Representation& m) {
  return dual(opposite(q), transpose(q, m));
}

Representation tau_inv(const Quiver& q, const Representation& m) {
  return transpose(opposite(q), dual(q, m));
}

std::vector<Representation> knit_indecomposables(const Quiver& q) {
  if (!is_representation_finite(q))
    throw NotRepresentationFinite("knit_indecomposables: quiver is not representation-finite");

  std::vector<Representation> inds;
  std::set<DimVector> seen;
  std::deque<Representation> frontier;
  for (int v = 1; v <= q.n; ++v) {
    Representation p = projective_rep(q, v);
    if (seen.insert(p.dims).second) {
      inds.push_back(p);
      frontier.push_back(std::move(p));
    }
  }

  int translations = 0;
  while (!frontier.empty()) {
    Representation m = std::move(frontier.front());
    frontier.pop_front();
    if (++translations > kKnitIterationCap)
      throw IterationCapExceeded("knit_indecomposables: translation cap exceeded");
    Representation next = tau_inv(q, m);
    if (is_zero_rep(next)) continue;
    if (seen.insert(next.dims).second) {
      inds.push_back(next);
      frontier.push_back(std::move(next));
    }
  }

  std::sort(inds.begin(), inds.end(), [](const Representation& a, const Representation& b) {
    int ta = total_dim(a), tb = total_dim(b);
    if (ta != tb) return ta < tb;
    return a.dims < b.dims;
  });
  return inds;
}

}  // namespace tiltlab
