#include "grs/cartan_types.hpp"

#include <utility>
#include <vector>

#include "grs/error.hpp"

namespace grs {

namespace {

IntMatrix from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
  for (auto [a, b] : edges) m(a, b) = m(b, a) = -1;
  return m;
}

void check_type(char family, std::size_t rank) {
  const bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
                  (family == 'E' && rank >= 6 && rank <= 8);
  if (!ok) throw Error(ErrorKind::NameUnknown, "no simply-laced type " + std::string(1, family) + std::to_string(rank));
}

}  // namespace

IntMatrix standard_cartan(char family, std::size_t rank) {
  check_type(family, rank);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    default:
      edges.emplace_back(0, 2);
      for (std::size_t i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      break;
  }
  return from_edges(rank, edges);
}

std::size_t classical_root_count(char family, std::size_t rank) {
  check_type(family, rank);
  switch (family) {
    case 'A': return rank * (rank + 1);
    case 'D': return 2 * rank * (rank - 1);
    default: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
  }
}

std::string type_name(char family, std::size_t rank) { return std::string(1, family) + "_" + std::to_string(rank); }

}  // namespace grs
