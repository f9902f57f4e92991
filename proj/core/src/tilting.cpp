#include "tiltlab/tilting.hpp"

#include <algorithm>

#include "tiltlab/translate.hpp"

namespace tiltlab {

int IndTable::index_of(const DimVector& d) const {
  for (size_t i = 0; i < ind.size(); ++i)
    if (ind[i].dims == d) return int(i);
  throw ContractViolation("IndTable: no indecomposable with the given dimension vector");
}

IndTable build_ind_table(const Quiver& q) {
  IndTable t;
  t.q = q;
  t.ind = knit_indecomposables(q);
  const int m = t.size();
  t.hom.assign(m, std::vector<int>(m, 0));
  t.ext.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      t.hom[i][j] = hom_dim(q, t.ind[i], t.ind[j]);
      t.ext[i][j] = ext_dim(q, t.ind[i], t.ind[j]);
    }
  return t;
}

bool is_tilting(const IndTable& t, const ModuleSet& m) {
  if (int(m.size()) != t.q.n) return false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= t.size()) return false;
    if (i > 0 && m[i] <= m[i - 1]) return false;
  }
  for (int i : m)
    for (int j : m)
      if (t.ext[i][j] != 0) return false;
  return true;
}

namespace {

void enumerate_rec(const IndTable& t, int next, ModuleSet& cur,
                   std::vector<ModuleSet>& out) {
  if (int(cur.size()) == t.q.n) {
    out.push_back(cur);
    return;
  }
  const int needed = t.q.n - int(cur.size());
  for (int cand = next; cand + needed <= t.size(); ++cand) {
    bool ok = t.ext[cand][cand] == 0;
    for (int i : cur)
      if (t.ext[i][cand] != 0 || t.ext[cand][i] != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(cand);
    enumerate_rec(t, cand + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ModuleSet> enumerate_tilting(const IndTable& t) {
  std::vector<ModuleSet> out;
  ModuleSet cur;
  enumerate_rec(t, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const IndTable& t, const ModuleSet& a, const ModuleSet& b) {
  auto generated = [&t](const ModuleSet& m, int x) {
    for (int i : m)
      if (t.ext[i][x] != 0) return false;
    return true;
  };
  for (int x = 0; x < t.size(); ++x)
    if (generated(a, x) && !generated(b, x)) return false;
  return true;
}

TiltingQuiver hasse(const IndTable& t, std::vector<ModuleSet> mods) {
  std::sort(mods.begin(), mods.end());
  const int m = int(mods.size());
  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) le[i][j] = leq(t, mods[i], mods[j]);

  TiltingQuiver tq;
  tq.vertices = std::move(mods);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !le[j][i]) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && le[j][k] && le[k][i]) cover = false;
      if (cover) tq.arrows.emplace_back(i, j);
    }
  std::sort(tq.arrows.begin(), tq.arrows.end());
  return tq;
}

TiltingQuiver exchange_quiver(const IndTable& t, std::vector<ModuleSet> mods) {
  std::sort(mods.begin(), mods.end());
  const int m = int(mods.size());
  TiltingQuiver tq;
  tq.vertices = std::move(mods);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      ModuleSet only_i, only_j;
      std::set_difference(tq.vertices[i].begin(), tq.vertices[i].end(),
                          tq.vertices[j].begin(), tq.vertices[j].end(),
                          std::back_inserter(only_i));
      std::set_difference(tq.vertices[j].begin(), tq.vertices[j].end(),
                          tq.vertices[i].begin(), tq.vertices[i].end(),
                          std::back_inserter(only_j));
      if (only_i.size() != 1 || only_j.size() != 1) continue;
      // Arrow i -> j when the exchanged summands extend as
      // 0 -> only_i -> E -> only_j -> 0.
      if (t.ext[only_j[0]][only_i[0]] != 0) tq.arrows.emplace_back(i, j);
    }
  std::sort(tq.arrows.begin(), tq.arrows.end());
  return tq;
}

}  // namespace tiltlab
