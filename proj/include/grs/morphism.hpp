#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grs/presentation.hpp"

namespace grs {

// Z-linear map between root lattices; column j is the image of basis root j
// of the source, so the matrix is rank(target) × rank(source).
struct LatticeMap {
  IntMatrix matrix;
  GrsPresentation source;
  GrsPresentation target;
};

enum class RootMembership {
  Verified,      // every basis image is a real root of the target
  Failed,        // some basis image is provably not a real root
  NotFoundUpToDepth,  // not found in the depth-bounded orbit; undecided
};

struct MorphismReport {
  bool isometry = false;
  bool commutes = false;
  RootMembership roots = RootMembership::Failed;
  // Set when root membership was decided on a depth-bounded orbit of a
  // non-positive-definite target.
  std::optional<std::size_t> depth;
  std::vector<std::string> notes;

  // True only when all three conditions are established.
  bool is_morphism() const { return isometry && commutes && roots == RootMembership::Verified; }
};

// Throws TargetNotEnumerable when the target is not positive definite and no
// depth bound is supplied.
MorphismReport is_morphism(const LatticeMap& map, std::optional<std::size_t> depth = std::nullopt);

}  // namespace grs
