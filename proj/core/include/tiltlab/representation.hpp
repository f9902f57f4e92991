#ifndef TILTLAB_REPRESENTATION_HPP
#define TILTLAB_REPRESENTATION_HPP

// Quiver representations over Q and the module-theoretic operations on them:
// Hom and Ext^1 spaces, trace/reject submodules, quotients, direct sum
// decomposition and universal extensions. All computations are exact and
// deterministic.

#include <utility>
#include <vector>

#include "tiltlab/matrix.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

// dims[v-1] is the dimension at vertex v; mats[k] is the matrix of arrow k,
// of shape dims[dst] x dims[src], acting on column vectors.
struct Representation {
  DimVector dims;
  std::vector<Matrix> mats;
};

// A morphism f: M -> N; comps[v-1] has shape dimN_v x dimM_v and satisfies
// N_a f_src = f_dst M_a exactly for every arrow a.
struct Morphism {
  std::vector<Matrix> comps;
};

// A subrepresentation given by per-vertex column-span bases inside M.
// The spans are arrow-closed: M_a * span(bases[src]) <= span(bases[dst]).
struct Subrep {
  std::vector<Matrix> bases;
};

Representation zero_rep(const Quiver& q);
bool is_zero_rep(const Representation& m);
int total_dim(const Representation& m);

void validate_representation(const Quiver& q, const Representation& m);
bool is_morphism(const Quiver& q, const Representation& m, const Representation& n,
                 const Morphism& f);

Representation direct_sum(const Quiver& q, const Representation& a, const Representation& b);
Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts);

// Basis of Hom(M, N), computed as the kernel of the block commutation system
//   (f_v)_v  |->  (N_a f_src - f_dst M_a)_a.
// The order of basis elements is fixed by kernel_basis.
std::vector<Morphism> hom_basis(const Quiver& q, const Representation& m,
                                const Representation& n);

int hom_dim(const Quiver& q, const Representation& m, const Representation& n);

// Ext^1(M, N) as the cokernel of the same block system. cocycles[k] holds,
// per arrow, a dimN_dst x dimM_src block; the classes of these cocycles form
// a basis of Ext^1(M, N). An extension 0 -> N -> E -> M -> 0 with cocycle z
// has E_v = N_v (+) M_v and arrow blocks [[N_a, z_a], [0, M_a]].
struct Ext1 {
  int dim = 0;
  std::vector<std::vector<Matrix>> cocycles;
};

Ext1 ext1(const Quiver& q, const Representation& m, const Representation& n);

int ext_dim(const Quiver& q, const Representation& m, const Representation& n);

// Trace of U in M: the smallest subrepresentation containing every image of
// a morphism U -> M.
Subrep trace(const Quiver& q, const Representation& u, const Representation& m);

// Reject of U in M: the intersection of the kernels of all morphisms M -> U.
Subrep reject(const Quiver& q, const Representation& u, const Representation& m);

// M / W together with the canonical projection. Quotient by a full
// subrepresentation yields the zero representation.
std::pair<Representation, Morphism> quotient(const Quiver& q, const Representation& m,
                                             const Subrep& w);

// Restriction of M to an arrow-closed subspace family.
Representation sub_rep(const Quiver& q, const Representation& m, const Subrep& w);

// True iff trace(X, M) = M, i.e. M is a quotient of a finite direct sum of
// copies of X.
bool is_generated_by(const Quiver& q, const Representation& m, const Representation& x);

// True iff reject(X, M) = 0, i.e. M embeds into a finite direct sum of
// copies of X.
bool is_cogenerated_by(const Quiver& q, const Representation& m, const Representation& x);

// Indecomposable direct summands, with multiplicity, via Fitting splittings:
// for endomorphisms f the stable decomposition M = ker f^d (+) im f^d with
// d = total dimension. Basis endomorphisms are tried first, then a fixed
// deterministic family of small integer combinations. A summand is declared
// indecomposable once no tried endomorphism splits it.
std::vector<Representation> decompose(const Quiver& q, const Representation& m);

// Isomorphism test in the representation-finite regime: both sides are
// decomposed and the indecomposable parts are compared as multisets of
// dimension vectors (indecomposables are determined by them there).
bool is_iso(const Quiver& q, const Representation& a, const Representation& b);

// Universal extension 0 -> U^r -> M -> N -> 0, r = dim Ext^1(N, U), whose
// class stacks a cocycle basis; the connecting map Hom(U^r, U) -> Ext^1(N, U)
// is then surjective and Ext^1(M, U) = 0. If additionally Hom(N, U) = 0 and
// Ext^1(U, U) = 0, then Hom(M, U) = 0. When Ext^1(N, U) = 0 this returns
// (N, 0) unchanged.
struct UniversalExtension {
  Representation middle;
  int rank = 0;  // r above
};

UniversalExtension universal_extension(const Quiver& q, const Representation& n,
                                       const Representation& u);

// Canonical trace sequence 0 -> Tr_M(X) -> M -> M/Tr_M(X) -> 0.
struct TraceSequence {
  Subrep sub;
  Representation quot;
  Morphism proj;
};

TraceSequence trace_sequence(const Quiver& q, const Representation& x, const Representation& m);

// Canonical reject sequence 0 -> Rej_M(X) -> M -> M/Rej_M(X) -> 0.
TraceSequence reject_sequence(const Quiver& q, const Representation& x, const Representation& m);

}  // namespace tiltlab

#endif
