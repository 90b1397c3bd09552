#pragma once

// Finite enumeration over a presentation: real-root orbits, Weyl group
// tables, conjugacy by exhaustion, axiom checks and subsystem closures.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grs/presentation.hpp"

namespace grs {

// Roots in ascending lexicographic order of their coordinate vectors.
struct RootSet {
  std::vector<Root> roots;
  bool complete = false;

  std::size_t size() const noexcept { return roots.size(); }
  bool contains(const Root& r) const;
  bool contains(std::span<const Int> coords) const;
};

// Orbit of the basis under the basis reflections. Throws NotPositiveDefinite
// when the orbit is not guaranteed to be finite.
RootSet enumerate_roots(const GrsPresentation& grs);

// Orbit truncated after `depth` rounds of reflection; complete is true only if
// a fixed point was reached within the bound.
RootSet enumerate_roots_bounded(const GrsPresentation& grs, std::size_t depth);

// One representative of each ± pair: the one whose first nonzero coordinate
// is positive. For a simple basis these are exactly the positive roots.
std::vector<Root> positive_roots(const RootSet& roots);

bool is_positive(const Root& r);

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

struct WeylGroupTable {
  std::vector<WeylElement> elements;  // BFS order from the identity
  bool complete = false;
  std::size_t cap = 0;

  std::size_t size() const noexcept { return elements.size(); }
};

WeylGroupTable enumerate_weyl_group(const GrsPresentation& grs, std::size_t cap = kDefaultGroupCap);

// Canonical byte serialization of a matrix, used as the dedup key.
std::string matrix_key(const IntMatrix& m);

// Traces of w, w², …, w^μ: equal for conjugate elements.
std::vector<Int> conjugacy_invariants(const WeylElement& w);

// nullopt means the group table was truncated and no cheap invariant
// separated the elements.
std::optional<bool> are_conjugate(const WeylGroupTable& group, const WeylElement& w1, const WeylElement& w2);
std::optional<bool> are_conjugate(const GrsPresentation& grs, const WeylElement& w1, const WeylElement& w2,
                                  std::size_t cap = kDefaultGroupCap);

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool partial = false;  // depth-bounded check on a non-positive-definite system
  std::size_t root_count = 0;

  bool ok() const;
};

// Full check for positive definite input. For other input, pass a depth to
// get a partial check over the truncated orbit; without one this throws
// NotPositiveDefinite.
AxiomReport check_axioms(const GrsPresentation& grs, std::optional<std::size_t> depth = std::nullopt);

struct Components {
  std::vector<std::vector<std::size_t>> parts;  // basis indices, each part sorted, parts by first index
  bool heuristic = false;                       // basis-graph connectivity only
};

Components irreducible_components(const GrsPresentation& grs);

// Smallest set of real roots containing ±seeds and closed under reflections
// in its own members.
RootSet subsystem_closure(const GrsPresentation& grs, std::span<const Root> seeds);

}  // namespace grs
