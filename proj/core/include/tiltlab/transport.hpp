// Tilting transport across a tilt of the hereditary algebra.
//
// Modules over the tilted endomorphism algebra are never materialized as
// representations. They live symbolically through the splitting torsion
// pair: H(M) stands for the image of a torsion module M under Hom(T0, -),
// E(X) for the image of a torsion-free module X under Ext1(T0, -), and all
// Hom/Ext dimensions between symbols dispatch back to the hereditary side.
// This gives two independent routes to the tilted algebra's tilting quiver:
// a direct Hasse computation over the symbols (the oracle) and, in the
// BB case, a purely combinatorial transport of the hereditary tilting
// quiver. The two must agree exactly.

#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiltlab/tilting.hpp"

namespace tiltlab {

struct SimpleIsInjective : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotTilting : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AdmissibilityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CogenerationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotBB : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInScope : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TorsionClass { Torsion, Free, Neither };

// Tag of a tilting module relative to the torsion pair of a fixed tilt:
// all summands torsion (TT), all torsion-free (TF), mixed but contained in
// the union (TTF), or touching the Neither class (Other).
enum class TiltTag { TT, TF, TTF, Other };

// Tilt data over a fixed IndTable; the table must outlive the data.
struct GeneralTiltData {
  const IndTable* tbl = nullptr;
  ModuleSet t0_ids;
  std::vector<TorsionClass> torsion;  // per indecomposable id
};

// A tilt by P[i] + tau_inv(S(i)) for a non-injective simple S(i).
struct BBTiltData : GeneralTiltData {
  int vertex = 0;  // 1-based
  int s_id = -1;
};

// A module over the tilted algebra: ids of torsion summands (under H) and
// of torsion-free summands (under E), each sorted ascending.
struct BModule {
  std::vector<int> y_part;
  std::vector<int> x_part;
  friend auto operator<=>(const BModule&, const BModule&) = default;
};

// One symbolic indecomposable summand on the tilted side.
struct BSummand {
  bool ext_side = false;  // false: H(id), true: E(id)
  int id = -1;
};

enum class BTag { Y, XY };  // x_part empty or not

struct BTiltingQuiver {
  std::vector<BModule> vertices;  // sorted
  std::vector<BTag> tags;
  std::vector<std::pair<int, int>> arrows;  // cover -> covered
};

struct Admissibility {
  bool ok = true;
  int tilt_index = -1;  // witness on failure
  int summand_id = -1;
};

struct PropertyReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass
  };
  std::vector<Item> items;
  bool all_pass() const;
};

// Torsion class per indecomposable: Torsion iff Ext1(T0, -) vanishes, else
// Free iff Hom(T0, -) vanishes, else Neither.
std::vector<TorsionClass> classify_torsion(const IndTable& tbl, const ModuleSet& t0);

// Validates the id set and classifies; throws NotTilting.
GeneralTiltData make_general_tilt(const IndTable& tbl, ModuleSet t0_ids);

// Throws SimpleIsInjective when no tilt exists at the vertex.
BBTiltData make_bb_tilt(const IndTable& tbl, int vertex);

// True iff the exchanged simple is projective (the tilted algebra is then
// hereditary).
bool is_apr(const BBTiltData& d);

std::vector<TiltTag> partition_tilting(const IndTable& tbl, const std::vector<ModuleSet>& tilts,
                                       const std::vector<TorsionClass>& torsion);

// No torsion summand of any TT/TTF tilting module may be generated by the
// torsion-free summands sitting next to it.
Admissibility is_admissible(const IndTable& tbl, const std::vector<ModuleSet>& tilts,
                            const std::vector<TorsionClass>& torsion);

// The transport map on a TT/TF/TTF tilting module T = Y0 + X0: the torsion
// part is replaced by Y0 / trace(X0, Y0) and the torsion-free part carried
// into the x slot. Throws NotInScope on an Other tag and
// AdmissibilityViolation when a torsion summand is generated by X0.
BModule phi(const GeneralTiltData& d, const ModuleSet& t);

// Variant keeping Y0 whole and sending reject(Y0, X0) into the x slot;
// requires that no torsion-free summand is cogenerated by Y0
// (CogenerationViolation otherwise).
BModule phi_reject(const GeneralTiltData& d, const ModuleSet& t);

// Variant applying both the quotient on the torsion side and the reject on
// the torsion-free side; requires both preconditions above.
BModule phi_both(const GeneralTiltData& d, const ModuleSet& t);

// Inverse of phi in the BB case, realized through universal extensions by
// the exchanged simple. Throws NotTilting unless b_is_tilting(d, b).
ModuleSet phi_inverse(const BBTiltData& d, const BModule& b);

// Hom (j = 0), Ext^1 (j = 1), Ext^2 (j = 2) between symbolic summands,
// dispatched to hereditary-side Hom/Ext data. Throws NotInScope when a
// summand id is not in the class its side requires.
int b_ext_dim(const GeneralTiltData& d, int j, const BSummand& a, const BSummand& b);

bool b_is_tilting(const GeneralTiltData& d, const BModule& b);

// All tilting modules over the tilted algebra, as maximal self-orthogonal
// symbol sets; sorted.
std::vector<BModule> b_enumerate_tilting(const GeneralTiltData& d);

// Hasse diagram of the tilted-side generation order over
// b_enumerate_tilting, computed from symbols only. This is the oracle the
// transported construction is checked against.
BTiltingQuiver b_hasse(const GeneralTiltData& d);

// Reconstructs the tilted-side tilting quiver from the hereditary one: phi
// images as vertices, block-restricted copies of k's arrows inside each
// tag class, and cross arrows found by complement counting. Only valid for
// BB data (NotBB otherwise). An internal consistency check compares the
// cross arrows against the extension-vanishing criterion along k's
// mixed-tag arrows.
BTiltingQuiver transport_construct(const BBTiltData& d, const TiltingQuiver& k);

// Structural properties of the pair (k, bk): convexity of the mixed class,
// absence of arrows between blocks in the forbidden direction, the
// complement bound for almost complete tilting modules on the torsion
// side, and the hereditary-iff-APR test.
PropertyReport verify_paper_properties(const BBTiltData& d, const TiltingQuiver& k,
                                       const BTiltingQuiver& bk);

}  // namespace tiltlab
