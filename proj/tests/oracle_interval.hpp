// Independent reference data for the equioriented linear quiver
// 1 -> 2 -> ... -> n. Indecomposables are the interval modules M[a,b]
// (dimension 1 exactly on a..b); Hom, Ext and the translate have closed
// forms in the endpoints. Everything here is computed from those closed
// forms alone, never through the library's linear algebra, so the two
// sides of every comparison are independent.

#pragma once

#include <vector>

#include "tiltlab/quiver.hpp"
#include "tiltlab/representation.hpp"

namespace oracle {

inline tiltlab::Quiver linear_quiver(int n) {
  tiltlab::Quiver q;
  q.n = n;
  for (int i = 1; i < n; ++i)
    q.arrows.push_back(tiltlab::Arrow{std::string(1, char('a' + i - 1)), i, i + 1});
  return q;
}

struct Interval {
  int a = 1, b = 1;  // 1-based, a <= b
};

inline std::vector<Interval> all_intervals(int n) {
  std::vector<Interval> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) out.push_back(Interval{a, b});
  return out;
}

inline tiltlab::DimVector interval_dims(int n, Interval m) {
  tiltlab::DimVector d(n, 0);
  for (int v = m.a; v <= m.b; ++v) d[v - 1] = 1;
  return d;
}

inline tiltlab::Representation interval_rep(int n, Interval m) {
  tiltlab::Representation r;
  r.dims = interval_dims(n, m);
  for (int i = 1; i < n; ++i) {
    tiltlab::Matrix mat(r.dims[i], r.dims[i - 1]);
    if (m.a <= i && i + 1 <= m.b) mat.at(0, 0) = 1;
    r.mats.push_back(std::move(mat));
  }
  return r;
}

inline int hom_dim(Interval m, Interval u) {
  return (u.a <= m.a && m.a <= u.b && u.b <= m.b) ? 1 : 0;
}

inline int ext_dim(int n, Interval m, Interval u) {
  return (m.b < n && m.a + 1 <= u.a && u.a <= m.b + 1 && m.b + 1 <= u.b) ? 1 : 0;
}

// tau shifts an interval right, tau_inv left; projectives [a, n] and
// injectives [1, b] die respectively.
inline bool is_projective(int n, Interval m) { return m.b == n; }
inline bool is_injective(Interval m) { return m.a == 1; }
inline Interval tau(Interval m) { return Interval{m.a + 1, m.b + 1}; }
inline Interval tau_inv(Interval m) { return Interval{m.a - 1, m.b - 1}; }

}  // namespace oracle
