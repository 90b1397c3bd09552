#pragma once

// Admissible representations of Weyl group elements, their Carter diagrams,
// the catalog of connected simply-laced diagrams up to rank 8, and the
// classification of irreducible positive definite systems by the diagram of
// their Coxeter element.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grs/presentation.hpp"
#include "grs/weyl.hpp"

namespace grs {

// w = (r_{β_1}⋯r_{β_k1})·(r_{β_k1+1}⋯r_{β_k2}); each group mutually orthogonal.
struct AdmissibleRep {
  std::vector<Root> group1;
  std::vector<Root> group2;

  std::size_t size() const noexcept { return group1.size() + group2.size(); }
  std::vector<Root> roots() const;  // group1 then group2
};

struct CarterDiagram {
  std::size_t vertex_count = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // i < j
  std::optional<std::string> name;

  CarterDiagram() = default;
  CarterDiagram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edge_list,
                std::optional<std::string> label = std::nullopt);

  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> neighbours(std::size_t v) const;
};

// Forward processes candidate roots by ascending height, ties broken so that
// earlier basis coordinates come first; Reverse walks the same list backwards.
enum class SearchOrder { Forward, Reverse };

std::vector<Root> search_order(const RootSet& roots, SearchOrder order);

// Any accepts the first admissible representation found. InCatalog skips
// representations whose diagram has a cycle of length six or more (or is
// otherwise missing from the catalog) and keeps searching.
enum class DiagramFilter { Any, InCatalog };

// First admissible representation of w in search order; nullopt if none
// exists. Throws NotPositiveDefinite.
std::optional<AdmissibleRep> find_admissible_representation(const GrsPresentation& grs, const WeylElement& w,
                                                            SearchOrder order = SearchOrder::Forward,
                                                            DiagramFilter filter = DiagramFilter::Any);

// As above, but a failed search throws SearchExhausted.
AdmissibleRep admissible_representation(const GrsPresentation& grs, const WeylElement& w,
                                        SearchOrder order = SearchOrder::Forward,
                                        DiagramFilter filter = DiagramFilter::Any);

struct Verdict {
  bool ok = false;
  std::vector<std::string> reasons;  // failed checks
};

Verdict verify_admissible(const GrsPresentation& grs, const WeylElement& w, const AdmissibleRep& rep);

WeylElement reflection_product(const GrsPresentation& grs, const std::vector<Root>& roots);

CarterDiagram diagram_of(const GrsPresentation& grs, const AdmissibleRep& rep);

// Vertex map d1 → d2 when the graphs are isomorphic.
std::optional<std::vector<std::size_t>> diagrams_isomorphic(const CarterDiagram& d1, const CarterDiagram& d2);

struct CatalogEntry {
  std::string name;
  CarterDiagram diagram;
  std::vector<std::string> aliases;  // transcribed labels that collapsed onto this entry
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  // Labels inside the transcribed index ranges that admit no graph of the
  // stated rank.
  std::vector<std::string> skipped;

  const CatalogEntry* find(std::string_view name) const;
  std::vector<const CatalogEntry*> of_rank(std::size_t rank) const;
};

inline constexpr std::size_t kCatalogMaxRank = 8;

const Catalog& catalog();

// Transcribed diagram shapes; exposed for tests and DOT output.
CarterDiagram path_diagram(std::size_t n);
CarterDiagram d_diagram(std::size_t n);
// Path of k vertices ending on a 4-cycle, then a tail of n − k − 3 vertices
// off the opposite cycle vertex. nullopt when n − k − 3 < 0.
std::optional<CarterDiagram> d_a_diagram(std::size_t n, std::size_t k);

std::optional<std::string> classify_diagram(const CarterDiagram& d);

// Family letter and rank of the classical root system that carries the named
// diagram: A_μ ↦ A_μ, D_μ and D_μ(a_k) ↦ D_μ, E_n and E_n(a_k) ↦ E_n.
std::pair<char, std::size_t> ambient_type(std::string_view name);

struct ComponentClassification {
  std::vector<std::size_t> basis_indices;
  AdmissibleRep rep;  // in the coordinates of the component's sub-presentation
  CarterDiagram diagram;
  std::string name;
  std::string ambient;
  std::size_t root_count = 0;
};

// One entry per irreducible component. Throws NotPositiveDefinite, and
// InternalError when a diagram is missing from the catalog or the root count
// contradicts the ambient type.
std::vector<ComponentClassification> classify_grs(const GrsPresentation& grs);

struct Realization {
  std::string name;
  GrsPresentation ambient;
  std::vector<Root> basis;  // ambient coordinates, group1 then group2
  std::size_t group1_size = 0;
  WeylElement element;          // product of the basis reflections, ambient coordinates
  GrsPresentation presentation;  // Gram matrix of `basis`
};

Realization realize_in_ambient(std::string_view name);
GrsPresentation realize(std::string_view name);

// Throws NotPositiveDefinite or Reducible. For rank ≤ 5 with `use_oracle`,
// also runs isomorphism_oracle and throws InternalError on disagreement.
bool are_isomorphic_grs(const GrsPresentation& r1, const GrsPresentation& r2, bool use_oracle = true);

// Brute-force search for a lattice isometry sending the basis of r1 to real
// roots of r2 and intertwining the Coxeter matrices.
std::optional<IntMatrix> isomorphism_oracle(const GrsPresentation& r1, const GrsPresentation& r2);

inline constexpr std::size_t kOracleMaxRank = 5;

}  // namespace grs
