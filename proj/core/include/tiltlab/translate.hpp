// Auslander-Reiten translation for path-algebra representations.
//
// transpose() materializes a minimal projective presentation P1 -> P0 -> M,
// reads the presentation off in path coordinates, and forms the cokernel of
// the induced map between opposite-side projectives. tau and tau_inv compose
// that with vertex-wise duality, so tau kills projectives and tau_inv kills
// injectives exactly.

#pragma once

#include <stdexcept>
#include <vector>

#include "tiltlab/quiver.hpp"
#include "tiltlab/representation.hpp"

namespace tiltlab {

struct NotRepresentationFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IterationCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kKnitIterationCap = 10000;

// Vertex-wise linear dual; the result is a representation of opposite(q),
// with the same arrow indexing.
Representation dual(const Quiver& q, const Representation& m);

// Transpose of m along a minimal projective presentation; the result is a
// representation of opposite(q). Projective summands of m are annihilated.
Representation transpose(const Quiver& q, const Representation& m);

Representation tau(const Quiver& q, const Representation& m);
Representation tau_inv(const Quiver& q, const Representation& m);

// All indecomposables up to isomorphism, obtained by applying tau_inv
// repeatedly to the projectives. Sorted by total dimension, then dimension
// vector (lexicographic). Throws NotRepresentationFinite for non-Dynkin
// quivers and IterationCapExceeded after kKnitIterationCap translations.
std::vector<Representation> knit_indecomposables(const Quiver& q);

}  // namespace tiltlab
