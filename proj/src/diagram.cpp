#include <algorithm>
#include <functional>

#include "grs/carter.hpp"
#include "grs/cartan_types.hpp"
#include "grs/error.hpp"

namespace grs {

CarterDiagram::CarterDiagram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edge_list,
                             std::optional<std::string> label)
    : vertex_count(n), name(std::move(label)) {
  for (auto [a, b] : edge_list) {
    if (a == b || a >= n || b >= n) throw Error(ErrorKind::InternalError, "diagram edge out of range or a loop");
    edges.emplace(std::min(a, b), std::max(a, b));
  }
}

bool CarterDiagram::adjacent(std::size_t i, std::size_t j) const {
  return edges.count({std::min(i, j), std::max(i, j)}) != 0;
}

std::size_t CarterDiagram::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

std::vector<std::size_t> CarterDiagram::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::size_t>> diagrams_isomorphic(const CarterDiagram& d1, const CarterDiagram& d2) {
  const std::size_t n = d1.vertex_count;
  if (n != d2.vertex_count || d1.edges.size() != d2.edges.size()) return std::nullopt;
  std::vector<std::size_t> deg1(n), deg2(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg1[v] = d1.degree(v);
    deg2[v] = d2.degree(v);
  }
  {
    auto s1 = deg1, s2 = deg2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  // Assign d1 vertices in BFS order so each new vertex has assigned neighbours
  // constraining its image.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (queued[root]) continue;
    queued[root] = true;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (std::size_t u : d1.neighbours(order[head]))
        if (!queued[u]) {
          queued[u] = true;
          order.push_back(u);
        }
  }

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || deg2[c] != deg1[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t u = order[k];
        consistent = d1.adjacent(u, v) == d2.adjacent(map[u], c);
      }
      if (!consistent) continue;
      map[v] = c;
      used[c] = true;
      if (place(depth + 1)) return true;
      used[c] = false;
    }
    map[v] = n;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map;
}

CarterDiagram path_diagram(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return CarterDiagram(n, e);
}

CarterDiagram d_diagram(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 3 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 3, n - 2);
  e.emplace_back(n - 3, n - 1);
  return CarterDiagram(n, e);
}

std::optional<CarterDiagram> d_a_diagram(std::size_t n, std::size_t k) {
  if (k < 1 || n < k + 3) return std::nullopt;
  // Vertices 0..k-1: left path ending at cycle vertex k-1; k, k+1: the two
  // cycle vertices adjacent to it; k+2: opposite cycle vertex; then the tail.
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  const std::size_t c = k - 1, a1 = k, a2 = k + 1, b = k + 2;
  e.emplace_back(c, a1);
  e.emplace_back(c, a2);
  e.emplace_back(a1, b);
  e.emplace_back(a2, b);
  for (std::size_t i = b; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return CarterDiagram(n, e);
}

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

Edges join(Edges base, const Edges& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

// Exceptional diagrams. Vertex letters follow the drawn figures:
// the square A–F–B–D with E beside F and the pendant G/C below E.
const Edges kE6a1 = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 1}, {4, 5}};
const Edges kE6a2 = join(kE6a1, {{5, 2}});
const Edges kE7a4 = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
// The three-dimensional cube; the figure's dotted strokes are its hidden edges.
const Edges kE8a8 = {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 6}, {3, 6}, {1, 5}, {2, 7}, {4, 7}, {6, 7}};

Edges e_tree(std::size_t n) {
  Edges e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
  for (std::size_t i = 6; i < n; ++i) e.emplace_back(i == 6 ? 4 : i - 1, i);
  return e;
}

Catalog build_catalog() {
  std::vector<std::pair<std::string, CarterDiagram>> transcribed;
  std::vector<std::string> skipped;
  for (std::size_t n = 1; n <= kCatalogMaxRank; ++n) transcribed.emplace_back(type_name('A', n), path_diagram(n));
  for (std::size_t n = 4; n <= kCatalogMaxRank; ++n) transcribed.emplace_back(type_name('D', n), d_diagram(n));
  for (std::size_t n = 4; n <= kCatalogMaxRank; ++n) {
    for (std::size_t k = 1; k <= (n + 1) / 2; ++k) {
      const std::string label = "D_" + std::to_string(n) + "(a_" + std::to_string(k) + ")";
      if (auto d = d_a_diagram(n, k))
        transcribed.emplace_back(label, *d);
      else
        skipped.push_back(label);
    }
  }
  transcribed.emplace_back("E_6", CarterDiagram(6, e_tree(6)));
  transcribed.emplace_back("E_6(a_1)", CarterDiagram(6, kE6a1));
  transcribed.emplace_back("E_6(a_2)", CarterDiagram(6, kE6a2));
  transcribed.emplace_back("E_7", CarterDiagram(7, e_tree(7)));
  transcribed.emplace_back("E_7(a_1)", CarterDiagram(7, join(kE6a1, {{2, 6}})));
  transcribed.emplace_back("E_7(a_2)", CarterDiagram(7, join(kE6a1, {{0, 6}})));
  transcribed.emplace_back("E_7(a_3)", CarterDiagram(7, join(kE6a2, {{2, 6}})));
  transcribed.emplace_back("E_7(a_4)", CarterDiagram(7, kE7a4));
  transcribed.emplace_back("E_8", CarterDiagram(8, e_tree(8)));
  transcribed.emplace_back("E_8(a_1)", CarterDiagram(8, join(kE6a1, {{2, 6}, {6, 7}})));
  transcribed.emplace_back("E_8(a_2)", CarterDiagram(8, join(kE6a1, {{3, 6}, {2, 7}})));
  transcribed.emplace_back("E_8(a_3)", CarterDiagram(8, join(kE6a1, {{0, 6}, {3, 7}})));
  transcribed.emplace_back("E_8(a_4)", CarterDiagram(8, join(kE6a2, {{2, 6}, {6, 7}})));
  transcribed.emplace_back("E_8(a_5)", CarterDiagram(8, join(kE6a2, {{2, 6}, {3, 7}})));
  transcribed.emplace_back("E_8(a_6)", CarterDiagram(8, join(kE6a2, {{2, 6}, {6, 7}, {7, 5}})));
  transcribed.emplace_back("E_8(a_7)", CarterDiagram(8, join(kE7a4, {{6, 7}})));
  transcribed.emplace_back("E_8(a_8)", CarterDiagram(8, kE8a8));

  Catalog cat;
  cat.skipped = std::move(skipped);
  for (auto& [label, diagram] : transcribed) {
    auto same = std::find_if(cat.entries.begin(), cat.entries.end(), [&](const CatalogEntry& e) {
      return diagrams_isomorphic(e.diagram, diagram).has_value();
    });
    if (same != cat.entries.end()) {
      same->aliases.push_back(label);
      continue;
    }
    diagram.name = label;
    cat.entries.push_back({label, diagram, {}});
  }
  return cat;
}

}  // namespace

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
    if (std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return &e;
  }
  return nullptr;
}

std::vector<const CatalogEntry*> Catalog::of_rank(std::size_t rank) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries)
    if (e.diagram.vertex_count == rank) out.push_back(&e);
  return out;
}

const Catalog& catalog() {
  static const Catalog cat = build_catalog();
  return cat;
}

std::optional<std::string> classify_diagram(const CarterDiagram& d) {
  for (const CatalogEntry* e : catalog().of_rank(d.vertex_count))
    if (diagrams_isomorphic(d, e->diagram)) return e->name;
  return std::nullopt;
}

std::pair<char, std::size_t> ambient_type(std::string_view name) {
  const CatalogEntry* entry = catalog().find(name);
  if (!entry) throw Error(ErrorKind::NameUnknown, "no catalog diagram named " + std::string(name));
  const char family = entry->name.front();
  if (family == 'E') return {'E', static_cast<std::size_t>(entry->name[2] - '0')};
  return {family, entry->diagram.vertex_count};
}

}  // namespace grs
