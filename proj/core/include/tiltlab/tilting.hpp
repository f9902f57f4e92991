// Tilting modules over a representation-finite path algebra and the two
// quivers on them: the Hasse diagram of the generation order and the
// exchange quiver of single-summand mutations. For hereditary algebras the
// two coincide; both are computed so callers can cross-check.

#pragma once

#include <vector>

#include "tiltlab/quiver.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

// Indecomposables in canonical order (total dimension, then dimension vector
// lexicographically) with precomputed Hom and Ext^1 dimension tables.
struct IndTable {
  Quiver q;
  std::vector<Representation> ind;
  std::vector<std::vector<int>> hom;  // hom[i][j] = dim Hom(ind[i], ind[j])
  std::vector<std::vector<int>> ext;  // ext[i][j] = dim Ext1(ind[i], ind[j])

  int size() const { return int(ind.size()); }
  // Index of the indecomposable with the given dimension vector; throws
  // ContractViolation if absent.
  int index_of(const DimVector& d) const;
};

IndTable build_ind_table(const Quiver& q);

// A basic module as a sorted list of indecomposable indices.
using ModuleSet = std::vector<int>;

// A tilting module here is a maximal self-orthogonal set: |set| = q.n and
// Ext1 vanishes between all members.
bool is_tilting(const IndTable& t, const ModuleSet& m);

// All tilting modules, each sorted ascending, the list sorted
// lexicographically.
std::vector<ModuleSet> enumerate_tilting(const IndTable& t);

// Generation order: a <= b iff every Ext1-perpendicular of b's summands
// contains that of a, equivalently Gen(a) is contained in Gen(b). The
// algebra itself is the maximum, its dual the minimum.
bool leq(const IndTable& t, const ModuleSet& a, const ModuleSet& b);

struct TiltingQuiver {
  std::vector<ModuleSet> vertices;            // sorted lexicographically
  std::vector<std::pair<int, int>> arrows;    // indices into vertices, cover -> covered
};

// Hasse diagram of the generation order on the given modules; arrows point
// from the larger to the smaller element of each covering pair.
TiltingQuiver hasse(const IndTable& t, std::vector<ModuleSet> mods);

// Exchange quiver: one arrow per mutation pair, oriented by the extension
// joining the exchanged summands.
TiltingQuiver exchange_quiver(const IndTable& t, std::vector<ModuleSet> mods);

}  // namespace tiltlab
