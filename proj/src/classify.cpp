#include <algorithm>
#include <functional>

#include "grs/cartan_types.hpp"
#include "grs/carter.hpp"
#include "grs/error.hpp"

namespace grs {

std::vector<ComponentClassification> classify_grs(const GrsPresentation& grs) {
  if (!grs.positive_definite())
    throw Error(ErrorKind::NotPositiveDefinite, "classification needs a positive definite Cartan form");
  std::vector<ComponentClassification> out;
  for (const auto& part : irreducible_components(grs).parts) {
    ComponentClassification cc;
    cc.basis_indices = part;
    const GrsPresentation sub = restrict_to(grs, part);
    cc.rep = admissible_representation(sub, coxeter_matrix(sub), SearchOrder::Forward, DiagramFilter::InCatalog);
    cc.diagram = diagram_of(sub, cc.rep);
    auto name = classify_diagram(cc.diagram);
    if (!name)
      throw Error(ErrorKind::InternalError,
                  "diagram with " + std::to_string(cc.diagram.vertex_count) + " vertices and " +
                      std::to_string(cc.diagram.edges.size()) + " edges is not in the catalog");
    cc.name = *name;
    cc.diagram.name = cc.name;
    const auto [family, rank] = ambient_type(cc.name);
    cc.ambient = type_name(family, rank);
    cc.root_count = enumerate_roots(sub).size();
    if (cc.root_count != classical_root_count(family, rank))
      throw Error(ErrorKind::InternalError, std::to_string(cc.root_count) + " roots contradict ambient type " +
                                                cc.ambient);
    out.push_back(std::move(cc));
  }
  return out;
}

namespace {

// Two-colouring of a connected bipartite diagram, colour of vertex 0 first.
std::vector<int> two_colouring(const CarterDiagram& d) {
  std::vector<int> colour(d.vertex_count, -1);
  for (std::size_t s = 0; s < d.vertex_count; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t u : d.neighbours(queue[head])) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[queue[head]];
          queue.push_back(u);
        } else if (colour[u] == colour[queue[head]]) {
          throw Error(ErrorKind::InternalError, "catalog diagram is not bipartite");
        }
      }
    }
  }
  return colour;
}

}  // namespace

Realization realize_in_ambient(std::string_view name) {
  const CatalogEntry* entry = catalog().find(name);
  if (!entry) throw Error(ErrorKind::NameUnknown, "no catalog diagram named " + std::string(name));
  const CarterDiagram& d = entry->diagram;
  const std::size_t n = d.vertex_count;
  const auto [family, rank] = ambient_type(entry->name);
  const GrsPresentation ambient(standard_cartan(family, rank));
  const RootSet all = enumerate_roots(ambient);
  const std::vector<Root> candidates = search_order(all, SearchOrder::Forward);

  const auto colour = two_colouring(d);
  std::vector<std::size_t> basis_order;
  for (int c : {0, 1})
    for (std::size_t v = 0; v < n; ++v)
      if (colour[v] == c) basis_order.push_back(v);
  const std::size_t group1_size =
      static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));

  // Assign diagram vertices in BFS order from vertex 0.
  std::vector<std::size_t> order{0};
  {
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t u : d.neighbours(order[head]))
        if (!seen[u]) {
          seen[u] = true;
          order.push_back(u);
        }
  }

  std::vector<std::size_t> assigned(n, candidates.size());
  std::vector<bool> used(candidates.size(), false);
  std::optional<Realization> found;

  auto gram_nonsingular = [&](std::size_t depth) {
    IntMatrix gram(depth, depth);
    for (std::size_t i = 0; i < depth; ++i)
      for (std::size_t j = 0; j < depth; ++j)
        gram(i, j) = ambient.pairing(candidates[assigned[order[i]]], candidates[assigned[order[j]]]);
    return det_exact(gram) != 0;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) {
      std::vector<Root> basis;
      for (std::size_t v : basis_order) basis.push_back(candidates[assigned[v]]);
      if (subsystem_closure(ambient, basis).size() != all.size()) return false;
      found = Realization{entry->name,          ambient, basis, group1_size, reflection_product(ambient, basis),
                          presentation_on(ambient, basis)};
      return true;
    }
    const std::size_t v = order[depth];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t u = order[k];
        consistent = (ambient.pairing(candidates[assigned[u]], candidates[c]) != 0) == d.adjacent(u, v);
      }
      if (!consistent) continue;
      assigned[v] = c;
      used[c] = true;
      // In a positive definite ambient space, independence is a nonzero Gram determinant.
      if (gram_nonsingular(depth + 1) && place(depth + 1)) return true;
      used[c] = false;
      assigned[v] = candidates.size();
    }
    return false;
  };

  if (!place(0)) throw Error(ErrorKind::SearchExhausted, "no root configuration realizes " + entry->name);
  return *std::move(found);
}

GrsPresentation realize(std::string_view name) { return realize_in_ambient(name).presentation; }

namespace {

void require_irreducible_pd(const GrsPresentation& r) {
  if (!r.positive_definite()) throw Error(ErrorKind::NotPositiveDefinite, "isomorphism test needs positive definite input");
  if (irreducible_components(r).parts.size() != 1)
    throw Error(ErrorKind::Reducible, "isomorphism test is only defined for irreducible systems");
}

}  // namespace

std::optional<IntMatrix> isomorphism_oracle(const GrsPresentation& r1, const GrsPresentation& r2) {
  const std::size_t n = r1.rank();
  if (r2.rank() != n) return std::nullopt;
  const RootSet target = enumerate_roots(r2);
  const IntMatrix c1 = coxeter_matrix(r1).matrix;
  const IntMatrix c2 = coxeter_matrix(r2).matrix;
  std::vector<std::size_t> image(n);
  std::optional<IntMatrix> found;

  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) {
      std::vector<IntVector> cols;
      for (std::size_t k = 0; k < n; ++k) cols.push_back(target.roots[image[k]].coords);
      IntMatrix phi = IntMatrix::from_columns(cols);
      const BigInt det = det_exact(phi);
      if (det != 1 && det != -1) return false;
      if (phi * c1 != c2 * phi) return false;
      found = std::move(phi);
      return true;
    }
    for (std::size_t c = 0; c < target.size(); ++c) {
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = r2.pairing(target.roots[image[k]], target.roots[c]) == r1.cartan()(k, i);
      if (!ok) continue;
      image[i] = c;
      if (place(i + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return found;
}

bool are_isomorphic_grs(const GrsPresentation& r1, const GrsPresentation& r2, bool use_oracle) {
  require_irreducible_pd(r1);
  require_irreducible_pd(r2);
  const bool same_name = r1.rank() == r2.rank() && classify_grs(r1).front().name == classify_grs(r2).front().name;
  if (use_oracle && r1.rank() <= kOracleMaxRank) {
    const bool oracle = isomorphism_oracle(r1, r2).has_value();
    if (oracle != same_name)
      throw Error(ErrorKind::InternalError, std::string("classification says ") + (same_name ? "isomorphic" : "distinct") +
                                                " but the brute-force search disagrees");
  }
  return same_name;
}

}  // namespace grs
