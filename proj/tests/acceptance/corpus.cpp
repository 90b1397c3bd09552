#include "corpus.hpp"

#include "grs/cartan_types.hpp"
#include "grs/weyl.hpp"

namespace grs::corpus {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<Root> standard_basis(std::size_t n) {
  std::vector<Root> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(basis_root(n, i));
  return basis;
}

}  // namespace

Representation weyl_conjugated(const GrsPresentation& grs, std::mt19937_64& rng) {
  const std::size_t n = grs.rank();
  WeylElement w{IntMatrix::identity(n)};
  for (std::size_t step = 0; step < 3 * n + 1; ++step) w = w * reflection_matrix(grs, basis_root(n, uniform(rng, n)));
  std::vector<Root> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Root{w.matrix.column(i)});
  return {presentation_on(grs, basis), basis};
}

Representation braid_moved(const GrsPresentation& grs, std::mt19937_64& rng, std::size_t moves) {
  const std::size_t n = grs.rank();
  std::vector<Root> basis = standard_basis(n);
  for (std::size_t step = 0; step < moves && n >= 2; ++step) {
    const std::size_t i = uniform(rng, n - 1);
    if (uniform(rng, 2) == 0) {
      Root moved{reflect(grs, basis[i].coords, basis[i + 1])};
      basis[i] = basis[i + 1];
      basis[i + 1] = std::move(moved);
    } else {
      Root moved{reflect(grs, basis[i + 1].coords, basis[i])};
      basis[i + 1] = basis[i];
      basis[i] = std::move(moved);
    }
  }
  for (auto& b : basis)
    if (uniform(rng, 3) == 0) b = negate(b);
  return {presentation_on(grs, basis), basis};
}

GrsPresentation all_two_system() {
  return GrsPresentation(IntMatrix::from_rows({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}));
}

std::vector<Entry> standard_types() {
  std::vector<Entry> out;
  auto add = [&](char family, std::size_t rank) {
    const std::string name = type_name(family, rank);
    out.push_back({name, GrsPresentation(standard_cartan(family, rank)), name});
  };
  for (std::size_t n = 1; n <= 8; ++n) add('A', n);
  for (std::size_t n = 4; n <= 8; ++n) add('D', n);
  for (std::size_t n = 6; n <= 8; ++n) add('E', n);
  return out;
}

std::vector<Entry> catalog_realizations() {
  std::vector<Entry> out;
  for (const auto& e : catalog().entries) out.push_back({"realize " + e.name, realize(e.name), e.name});
  return out;
}

std::vector<Entry> build(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Entry> base = standard_types();
  for (auto& e : catalog_realizations()) base.push_back(std::move(e));

  std::vector<Entry> out = base;
  out.push_back({"rank-3 all-2", all_two_system(), ""});
  for (const auto& e : base) {
    out.push_back({e.label + " / Weyl-conjugated basis", weyl_conjugated(e.grs, rng).grs, e.expected_name});
    for (int k = 0; k < 2; ++k)
      out.push_back({e.label + " / braid-moved basis " + std::to_string(k + 1),
                     braid_moved(e.grs, rng, 4 * e.grs.rank()).grs, e.expected_name});
  }
  return out;
}

}  // namespace grs::corpus
