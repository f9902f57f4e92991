#include "tiltlab/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tiltlab/representation.hpp"

namespace tiltlab {

namespace {

// Kahn topological check; returns false if a directed cycle exists.
bool is_acyclic(const Quiver& q) {
  std::vector<int> indeg(q.n + 1, 0);
  for (const Arrow& a : q.arrows) ++indeg[a.dst];
  std::vector<int> stack;
  for (int v = 1; v <= q.n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const Arrow& a : q.arrows)
      if (a.src == v && --indeg[a.dst] == 0) stack.push_back(a.dst);
  }
  return seen == q.n;
}

}  // namespace

void validate_quiver(const Quiver& q) {
  if (q.n < 0) throw ParseError(0, "negative vertex count");
  std::set<std::string> names;
  for (const Arrow& a : q.arrows) {
    if (!names.insert(a.name).second) throw ParseError(0, "duplicate arrow name '" + a.name + "'");
    if (a.src < 1 || a.src > q.n || a.dst < 1 || a.dst > q.n)
      throw ParseError(0, "arrow '" + a.name + "' endpoint out of range");
    if (a.src == a.dst) throw ParseError(0, "arrow '" + a.name + "' is a loop");
  }
  if (!is_acyclic(q)) throw ParseError(0, "quiver has a directed cycle");
}

Quiver parse_quiver(const std::string& text) {
  Quiver q;
  bool have_vertices = false;
  std::set<std::string> names;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok[0] == '#') continue;

    if (tok == "vertices") {
      if (have_vertices) throw ParseError(lineno, "duplicate 'vertices' line");
      long long n;
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "expected 'vertices N' with N >= 0");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after 'vertices'");
      q.n = int(n);
      have_vertices = true;
    } else if (tok == "arrow") {
      if (!have_vertices) throw ParseError(lineno, "'arrow' before 'vertices'");
      Arrow a;
      if (!(ls >> a.name >> a.src >> a.dst))
        throw ParseError(lineno, "expected 'arrow NAME SRC DST'");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after arrow");
      if (!names.insert(a.name).second)
        throw ParseError(lineno, "duplicate arrow name '" + a.name + "'");
      if (a.src < 1 || a.src > q.n || a.dst < 1 || a.dst > q.n)
        throw ParseError(lineno, "vertex out of range in arrow '" + a.name + "'");
      if (a.src == a.dst) throw ParseError(lineno, "loop arrow '" + a.name + "' not allowed");
      q.arrows.push_back(std::move(a));
    } else {
      throw ParseError(lineno, "unknown directive '" + tok + "'");
    }
  }
  if (!have_vertices) throw ParseError(lineno, "missing 'vertices' line");
  if (!is_acyclic(q)) throw ParseError(lineno, "quiver has a directed cycle");
  return q;
}

std::string serialize_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "vertices " << q.n << "\n";
  for (const Arrow& a : q.arrows) out << "arrow " << a.name << " " << a.src << " " << a.dst << "\n";
  return out.str();
}

Quiver opposite(const Quiver& q) {
  Quiver o;
  o.n = q.n;
  o.arrows.reserve(q.arrows.size());
  for (const Arrow& a : q.arrows) o.arrows.push_back(Arrow{a.name, a.dst, a.src});
  return o;
}

std::vector<Path> paths_between(const Quiver& q, int i, int j) {
  // Depth-first enumeration, then canonical sort by the arrow-name sequence.
  std::vector<Path> result;
  Path cur;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == j) result.push_back(cur);
    for (int k = 0; k < int(q.arrows.size()); ++k)
      if (q.arrows[k].src == v) {
        cur.push_back(k);
        self(self, q.arrows[k].dst);
        cur.pop_back();
      }
  };
  dfs(dfs, i);
  std::sort(result.begin(), result.end(), [&](const Path& a, const Path& b) {
    auto name = [&](int k) -> const std::string& { return q.arrows[k].name; };
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](int x, int y) { return name(x) < name(y); });
  });
  return result;
}

Representation projective_rep(const Quiver& q, int i) {
  if (i < 1 || i > q.n) throw ContractViolation("projective_rep: vertex out of range");
  std::vector<std::vector<Path>> basis(q.n + 1);
  for (int j = 1; j <= q.n; ++j) basis[j] = paths_between(q, i, j);

  Representation m;
  m.dims.resize(q.n);
  for (int j = 1; j <= q.n; ++j) m.dims[j - 1] = int(basis[j].size());
  m.mats.reserve(q.arrows.size());
  for (int k = 0; k < int(q.arrows.size()); ++k) {
    const Arrow& a = q.arrows[k];
    Matrix mat(m.dims[a.dst - 1], m.dims[a.src - 1]);
    for (int c = 0; c < int(basis[a.src].size()); ++c) {
      Path p = basis[a.src][c];
      p.push_back(k);
      auto it = std::find(basis[a.dst].begin(), basis[a.dst].end(), p);
      mat.at(int(it - basis[a.dst].begin()), c) = 1;
    }
    m.mats.push_back(std::move(mat));
  }
  return m;
}

Representation injective_rep(const Quiver& q, int i) {
  if (i < 1 || i > q.n) throw ContractViolation("injective_rep: vertex out of range");
  std::vector<std::vector<Path>> basis(q.n + 1);
  for (int j = 1; j <= q.n; ++j) basis[j] = paths_between(q, j, i);

  Representation m;
  m.dims.resize(q.n);
  for (int j = 1; j <= q.n; ++j) m.dims[j - 1] = int(basis[j].size());
  m.mats.reserve(q.arrows.size());
  for (int k = 0; k < int(q.arrows.size()); ++k) {
    const Arrow& a = q.arrows[k];
    Matrix mat(m.dims[a.dst - 1], m.dims[a.src - 1]);
    for (int c = 0; c < int(basis[a.src].size()); ++c) {
      const Path& p = basis[a.src][c];
      if (p.empty() || p.front() != k) continue;  // does not factor through a
      Path rest(p.begin() + 1, p.end());
      auto it = std::find(basis[a.dst].begin(), basis[a.dst].end(), rest);
      mat.at(int(it - basis[a.dst].begin()), c) = 1;
    }
    m.mats.push_back(std::move(mat));
  }
  return m;
}

Representation simple_rep(const Quiver& q, int i) {
  if (i < 1 || i > q.n) throw ContractViolation("simple_rep: vertex out of range");
  Representation m;
  m.dims.assign(q.n, 0);
  m.dims[i - 1] = 1;
  for (const Arrow& a : q.arrows)
    m.mats.emplace_back(m.dims[a.dst - 1], m.dims[a.src - 1]);
  return m;
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (int(d.size()) != q.n || int(e.size()) != q.n)
    throw ContractViolation("euler_form: dimension vector length mismatch");
  long long s = 0;
  for (int v = 0; v < q.n; ++v) s += (long long)d[v] * e[v];
  for (const Arrow& a : q.arrows) s -= (long long)d[a.src - 1] * e[a.dst - 1];
  return s;
}

bool is_representation_finite(const Quiver& q) {
  // Reject parallel edges (in either direction) between the same vertex pair.
  std::set<std::pair<int, int>> edges;
  for (const Arrow& a : q.arrows) {
    auto e = std::minmax(a.src, a.dst);
    if (!edges.insert({e.first, e.second}).second) return false;
  }

  // Connected components of the underlying graph.
  std::vector<int> comp(q.n + 1, -1);
  int ncomp = 0;
  for (int start = 1; start <= q.n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arrow& a : q.arrows) {
        int w = a.src == v ? a.dst : a.dst == v ? a.src : 0;
        if (w && comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }

  std::vector<int> verts(ncomp, 0);
  std::vector<int> edgec(ncomp, 0);
  for (int v = 1; v <= q.n; ++v) ++verts[comp[v]];
  for (const Arrow& a : q.arrows) ++edgec[comp[a.src]];

  std::vector<std::vector<int>> degree(ncomp);
  std::vector<int> deg(q.n + 1, 0);
  for (const Arrow& a : q.arrows) {
    ++deg[a.src];
    ++deg[a.dst];
  }

  for (int c = 0; c < ncomp; ++c) {
    if (edgec[c] != verts[c] - 1) return false;  // not a tree
  }

  // Each component is now a tree with simple edges; classify its shape.
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> vs;
    for (int v = 1; v <= q.n; ++v)
      if (comp[v] == c) vs.push_back(v);

    int branch = 0;  // the unique vertex of degree 3, if any
    for (int v : vs) {
      if (deg[v] > 3) return false;
      if (deg[v] == 3) {
        if (branch) return false;  // two branch points: not A/D/E
        branch = v;
      }
    }
    if (!branch) continue;  // a path: type A

    // Walk the three branches from the branch point and measure lengths.
    std::vector<int> lens;
    for (const Arrow& a : q.arrows) {
      int next = a.src == branch ? a.dst : a.dst == branch ? a.src : 0;
      if (!next) continue;
      int len = 1, prev = branch, cur = next;
      for (;;) {
        int following = 0;
        for (const Arrow& b : q.arrows) {
          int w = b.src == cur ? b.dst : b.dst == cur ? b.src : 0;
          if (w && w != prev) {
            following = w;
            break;
          }
        }
        if (!following) break;
        prev = cur;
        cur = following;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens.size() != 3) return false;
    if (lens[0] != 1) return false;
    if (lens[1] == 1) continue;                                    // type D
    if (lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) continue;    // E6, E7, E8
    return false;
  }
  return true;
}

}  // namespace tiltlab
