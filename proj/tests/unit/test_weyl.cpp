#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "grs/cartan_types.hpp"
#include "grs/error.hpp"
#include "grs/weyl.hpp"
#include "oracles.hpp"

using namespace grs;

namespace {

const GrsPresentation kA1(IntMatrix{{2}});
const GrsPresentation kA2(IntMatrix{{2, -1}, {-1, 2}});

std::vector<Root> as_roots(const std::vector<IntVector>& vs) {
  std::vector<Root> out;
  for (const auto& v : vs) out.push_back(Root{v});
  return out;
}

}  // namespace

TEST_CASE("coordinate-model oracles") {
  CHECK(oracle::type_a_root_count(1) == 2);
  CHECK(oracle::type_a_root_count(2) == 6);
  CHECK(oracle::type_d_root_count(4) == 24);
  CHECK(oracle::type_e_root_count(8) == 240);
  CHECK(oracle::type_e_root_count(7) == 126);
  CHECK(oracle::type_e_root_count(6) == 72);
}

TEST_CASE("root enumeration examples") {
  CHECK(enumerate_roots(kA1).roots == as_roots({{-1}, {1}}));
  const RootSet a2 = enumerate_roots(kA2);
  CHECK(a2.complete);
  CHECK(a2.roots == as_roots({{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}}));
  try {
    enumerate_roots(corpus::all_two_system());
    FAIL("expected NotPositiveDefinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPositiveDefinite);
  }
  const RootSet partial = enumerate_roots_bounded(corpus::all_two_system(), 3);
  CHECK_FALSE(partial.complete);
  CHECK(partial.size() > 3);
}

TEST_CASE("root counts match coordinate models and the 3^μ+μ bound") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate_roots(GrsPresentation(standard_cartan('A', n))).size() == oracle::type_a_root_count(n));
    if (n >= 4)
      CHECK(enumerate_roots(GrsPresentation(standard_cartan('D', n))).size() == oracle::type_d_root_count(n));
  }
  for (const auto& e : corpus::build()) {
    if (!e.grs.positive_definite()) continue;
    std::size_t bound = 1;
    for (std::size_t i = 0; i < e.grs.rank(); ++i) bound *= 3;
    CHECK(enumerate_roots(e.grs).size() <= bound + e.grs.rank());
  }
}

TEST_CASE("root set properties") {
  for (const auto& e : corpus::standard_types()) {
    if (e.grs.rank() > 6) continue;
    CAPTURE(e.label);
    const RootSet roots = enumerate_roots(e.grs);
    for (const auto& r : roots.roots) {
      CHECK(e.grs.norm(r) == 2);
      CHECK(roots.contains(negate(r)));
    }
    // Every basis reflection permutes the set.
    for (std::size_t i = 0; i < e.grs.rank(); ++i) {
      std::vector<Root> image;
      for (const auto& r : roots.roots) image.push_back(Root{reflect(e.grs, r.coords, basis_root(e.grs.rank(), i))});
      std::sort(image.begin(), image.end());
      CHECK(image == roots.roots);
    }
    CHECK(enumerate_roots(e.grs).roots == roots.roots);  // deterministic
  }
}

TEST_CASE("Weyl group tables") {
  CHECK(enumerate_weyl_group(kA1).size() == 2);
  CHECK(enumerate_weyl_group(kA2).size() == 6);
  const GrsPresentation d4(standard_cartan('D', 4));
  const WeylGroupTable w = enumerate_weyl_group(d4);
  CHECK(w.complete);
  CHECK(w.size() == 192);
  for (const auto& g : w.elements) CHECK(preserves_form(d4, g.matrix));
  const WeylGroupTable capped = enumerate_weyl_group(d4, 50);
  CHECK_FALSE(capped.complete);
  CHECK(capped.size() <= 50);
  CHECK(enumerate_weyl_group(GrsPresentation(standard_cartan('A', 4))).size() == 120);
}

TEST_CASE("conjugation covariance r_{w(α)}·w = w·r_α") {
  const GrsPresentation d4(standard_cartan('D', 4));
  const WeylGroupTable group = enumerate_weyl_group(d4);
  const RootSet roots = enumerate_roots(d4);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const WeylElement& w = group.elements[rng() % group.size()];
    const Root& a = roots.roots[rng() % roots.size()];
    const Root wa{w.matrix * std::span<const Int>(a.coords)};
    CHECK(roots.contains(wa));
    CHECK(reflection_matrix(d4, wa).matrix * w.matrix == w.matrix * reflection_matrix(d4, a).matrix);
  }
}

TEST_CASE("conjugacy examples") {
  const WeylElement r1 = reflection_matrix(kA2, basis_root(2, 0));
  const WeylElement r2 = reflection_matrix(kA2, basis_root(2, 1));
  const WeylElement c = coxeter_matrix(kA2);
  CHECK(are_conjugate(kA2, r1, r2) == true);
  CHECK(are_conjugate(kA2, c, c * c) == true);
  CHECK(are_conjugate(kA2, r1, c) == false);
  // A truncated table answers only when an invariant separates the elements.
  const GrsPresentation e8(standard_cartan('E', 8));
  const WeylElement ce8 = coxeter_matrix(e8);
  CHECK(are_conjugate(e8, ce8, reflection_matrix(e8, basis_root(8, 0)), 100) == false);
  CHECK_FALSE(are_conjugate(e8, ce8, ce8 * ce8 * ce8 * ce8 * ce8 * ce8 * ce8, 100).has_value());
}

TEST_CASE("axiom checks") {
  CHECK(check_axioms(kA1).ok());
  const AxiomReport a2 = check_axioms(kA2);
  CHECK(a2.ok());
  CHECK(a2.root_count == 6);
  const AxiomReport d4 = check_axioms(GrsPresentation(standard_cartan('D', 4)));
  CHECK(d4.ok());
  CHECK(d4.root_count == 24);
  const AxiomReport partial = check_axioms(corpus::all_two_system(), 2);
  CHECK(partial.partial);
  CHECK_THROWS_AS(check_axioms(corpus::all_two_system()), Error);
}

TEST_CASE("irreducible components") {
  CHECK(irreducible_components(kA2).parts.size() == 1);
  const Components two = irreducible_components(GrsPresentation(IntMatrix{{2, 0}, {0, 2}}));
  CHECK(two.parts == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK_FALSE(two.heuristic);
  CHECK(irreducible_components(GrsPresentation(standard_cartan('D', 4))).parts.size() == 1);
  // Orthogonal basis roots can still lie in one component through other roots.
  const GrsPresentation a3_by_braid(IntMatrix{{2, 0, 1}, {0, 2, -1}, {1, -1, 2}});
  CHECK(irreducible_components(a3_by_braid).parts.size() == 1);
  CHECK(irreducible_components(corpus::all_two_system()).heuristic);
}

TEST_CASE("subsystem closure") {
  CHECK(subsystem_closure(kA1, as_roots({{1}})).size() == 2);
  CHECK(subsystem_closure(kA2, as_roots({{1, 0}, {0, 1}})).size() == 6);
  const GrsPresentation a3(standard_cartan('A', 3));
  const RootSet ortho = subsystem_closure(a3, as_roots({{1, 0, 0}, {0, 0, 1}}));
  CHECK(ortho.roots == as_roots({{-1, 0, 0}, {0, 0, -1}, {0, 0, 1}, {1, 0, 0}}));
  try {
    subsystem_closure(kA2, as_roots({{1, -1}}));
    FAIL("expected SeedNotRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SeedNotRoot);
  }
}
