#ifndef TILTLAB_QUIVER_HPP
#define TILTLAB_QUIVER_HPP

// Finite acyclic quivers and their path algebras' basic representations.
//
// Vertices are numbered 1..n. Arrows carry unique names; loops and directed
// cycles are rejected at parse/validation time, so path counts are finite.

#include <stdexcept>
#include <string>
#include <vector>

#include "tiltlab/matrix.hpp"

namespace tiltlab {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  int n = 0;  // vertex count; vertices are 1..n
  std::vector<Arrow> arrows;
  bool operator==(const Quiver&) const = default;
};

using DimVector = std::vector<int>;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

// Text format, one item per line, whitespace separated:
//   # comment
//   vertices N
//   arrow NAME SRC DST
// Exactly one `vertices` line is required and it must precede the arrows.
// Duplicate arrow names, out-of-range endpoints, loops and directed cycles
// are reported with the offending line number.
Quiver parse_quiver(const std::string& text);

std::string serialize_quiver(const Quiver& q);

// Structural validation used by parse_quiver; throws ParseError with line 0
// for programmatically built quivers.
void validate_quiver(const Quiver& q);

Quiver opposite(const Quiver& q);

// A path is a sequence of arrow indices, composable left to right
// (path[k].dst == path[k+1].src). The empty path at a vertex is allowed.
using Path = std::vector<int>;

// All paths from vertex i to vertex j, ordered lexicographically by the
// sequence of arrow names. This ordering fixes the canonical bases below.
std::vector<Path> paths_between(const Quiver& q, int i, int j);

struct Representation;  // see representation.hpp

// Indecomposable projective at i: basis at vertex j = paths i ~> j; an arrow
// acts by appending itself to a path.
Representation projective_rep(const Quiver& q, int i);

// Indecomposable injective at i: basis at vertex j = paths j ~> i; an arrow
// acts by stripping itself from the front of a path when possible.
Representation injective_rep(const Quiver& q, int i);

Representation simple_rep(const Quiver& q, int i);

// <d, e> = sum_v d_v e_v - sum_{a: i->j} d_i e_j. For representations M, N
// this equals dim Hom(M, N) - dim Ext^1(M, N).
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// True iff the underlying undirected graph is a disjoint union of simply
// laced Dynkin diagrams (A_n, D_n, E6, E7, E8). Parallel arrows in either
// direction disqualify.
bool is_representation_finite(const Quiver& q);

}  // namespace tiltlab

#endif
