#include "grs/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "grs/error.hpp"

namespace grs {

bool RootSet::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

bool RootSet::contains(std::span<const Int> coords) const {
  return contains(Root{IntVector(coords.begin(), coords.end())});
}

namespace {

// r_i(v) = v − I(v, e_i)·e_i only touches coordinate i.
IntVector reflect_basis(const IntMatrix& cartan, const IntVector& v, std::size_t i) {
  Int c = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) c = checked_add(c, checked_mul(cartan(i, k), v[k]));
  IntVector out = v;
  out[i] = checked_sub(out[i], c);
  return out;
}

RootSet orbit(const GrsPresentation& grs, std::optional<std::size_t> depth) {
  const std::size_t n = grs.rank();
  std::set<IntVector> seen;
  std::vector<IntVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    frontier.push_back(basis_root(n, i).coords);
    seen.insert(frontier.back());
  }
  std::sort(frontier.begin(), frontier.end());
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    if (depth && rounds == *depth) break;
    std::vector<IntVector> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        IntVector w = reflect_basis(grs.cartan(), v, i);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    ++rounds;
  }
  RootSet out;
  out.complete = frontier.empty();
  out.roots.reserve(seen.size());
  for (const auto& v : seen) out.roots.push_back(Root{v});
  return out;
}

}  // namespace

RootSet enumerate_roots(const GrsPresentation& grs) {
  if (!grs.positive_definite())
    throw Error(ErrorKind::NotPositiveDefinite, "real roots are only enumerable for positive definite Cartan forms");
  return orbit(grs, std::nullopt);
}

RootSet enumerate_roots_bounded(const GrsPresentation& grs, std::size_t depth) { return orbit(grs, depth); }

bool is_positive(const Root& r) {
  for (Int x : r.coords)
    if (x != 0) return x > 0;
  return false;
}

std::vector<Root> positive_roots(const RootSet& roots) {
  std::vector<Root> out;
  for (const auto& r : roots.roots)
    if (is_positive(r)) out.push_back(r);
  return out;
}

std::string matrix_key(const IntMatrix& m) {
  std::string key;
  key.reserve(m.data().size() + 2);
  key.push_back(static_cast<char>(m.rows()));
  key.push_back(static_cast<char>(m.cols()));
  for (Int x : m.data()) {
    // zigzag varint
    auto z = (static_cast<std::uint64_t>(x) << 1) ^ static_cast<std::uint64_t>(x >> 63);
    while (z >= 0x80) {
      key.push_back(static_cast<char>((z & 0x7f) | 0x80));
      z >>= 7;
    }
    key.push_back(static_cast<char>(z));
  }
  return key;
}

WeylGroupTable enumerate_weyl_group(const GrsPresentation& grs, std::size_t cap) {
  const std::size_t n = grs.rank();
  const IntMatrix& cartan = grs.cartan();
  WeylGroupTable table;
  table.cap = cap;
  std::unordered_set<std::string> seen;
  table.elements.push_back({IntMatrix::identity(n)});
  seen.insert(matrix_key(table.elements.front().matrix));
  table.complete = true;
  for (std::size_t head = 0; head < table.elements.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      // r_i = 1 − e_i ⊗ (row i of I), so r_i·w changes only row i of w.
      IntMatrix next = table.elements[head].matrix;
      for (std::size_t c = 0; c < n; ++c) {
        Int acc = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (cartan(i, k) != 0) acc = checked_add(acc, checked_mul(cartan(i, k), next(k, c)));
        next(i, c) = checked_sub(next(i, c), acc);
      }
      if (!seen.insert(matrix_key(next)).second) continue;
      if (table.elements.size() >= cap) {
        table.complete = false;
        return table;
      }
      table.elements.push_back({std::move(next)});
    }
  }
  return table;
}

std::vector<Int> conjugacy_invariants(const WeylElement& w) {
  std::vector<Int> traces;
  IntMatrix power = w.matrix;
  for (std::size_t k = 0; k < w.matrix.rows(); ++k) {
    Int t = 0;
    for (std::size_t i = 0; i < power.rows(); ++i) t = checked_add(t, power(i, i));
    traces.push_back(t);
    power = power * w.matrix;
  }
  return traces;
}

std::optional<bool> are_conjugate(const WeylGroupTable& group, const WeylElement& w1, const WeylElement& w2) {
  if (conjugacy_invariants(w1) != conjugacy_invariants(w2)) return false;
  // u·w1·u⁻¹ = w2  ⇔  u·w1 = w2·u
  for (const auto& u : group.elements)
    if (u.matrix * w1.matrix == w2.matrix * u.matrix) return true;
  if (!group.complete) return std::nullopt;
  return false;
}

std::optional<bool> are_conjugate(const GrsPresentation& grs, const WeylElement& w1, const WeylElement& w2,
                                  std::size_t cap) {
  if (conjugacy_invariants(w1) != conjugacy_invariants(w2)) return false;
  return are_conjugate(enumerate_weyl_group(grs, cap), w1, w2);
}

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

namespace {

bool proportional(const Root& a, const Root& b) {
  // rank-1 test on the 2×n matrix [a; b]
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (checked_mul(a[i], b[j]) != checked_mul(a[j], b[i])) return false;
  return true;
}

}  // namespace

AxiomReport check_axioms(const GrsPresentation& grs, std::optional<std::size_t> depth) {
  const std::size_t n = grs.rank();
  AxiomReport report;
  RootSet roots;
  if (grs.positive_definite()) {
    roots = enumerate_roots(grs);
  } else {
    if (!depth)
      throw Error(ErrorKind::NotPositiveDefinite, "full axiom check needs a positive definite Cartan form");
    roots = enumerate_roots_bounded(grs, *depth);
    report.partial = true;
  }
  report.root_count = roots.size();
  auto add = [&report](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  {
    std::vector<IntVector> rows;
    for (const auto& r : roots.roots) rows.push_back(r.coords);
    std::vector<IntVector> identity;
    for (std::size_t i = 0; i < n; ++i) identity.push_back(basis_root(n, i).coords);
    add("roots span the lattice", hermite_basis(rows) == identity);
  }
  {
    std::string bad;
    for (const auto& r : roots.roots)
      if (grs.norm(r) != 2) {
        bad = to_string(r.coords);
        break;
      }
    add("every root has norm 2", bad.empty(), bad);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < roots.size() && ok; ++i)
      for (std::size_t j = 0; j < roots.size() && ok; ++j)
        if (i != j && proportional(roots.roots[i], roots.roots[j]) && roots.roots[j] != negate(roots.roots[i])) {
          ok = false;
          detail = to_string(roots.roots[i].coords) + " and " + to_string(roots.roots[j].coords);
        }
    add("only ±1 multiples of a root are roots", ok, detail);
  }
  if (report.partial) {
    add("basis roots are real roots", true);
    add("Coxeter matrix preserves the Cartan form", preserves_form(grs, coxeter_matrix(grs).matrix));
    return report;
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& a : roots.roots) {
      for (const auto& b : roots.roots) {
        if (!roots.contains(reflect(grs, b.coords, a))) {
          ok = false;
          detail = "r_" + to_string(a.coords) + " moves " + to_string(b.coords) + " out of the set";
          break;
        }
      }
      if (!ok) break;
    }
    add("reflections in roots permute the roots", ok, detail);
  }
  {
    bool ok = true;
    for (const auto& r : roots.roots) ok = ok && roots.contains(negate(r));
    add("closed under negation", ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (const auto& a : roots.roots) {
      for (const auto& b : roots.roots) {
        const Int p = grs.pairing(a, b);
        const bool plus_minus = (b == a || b == negate(a));
        if (p < -2 || p > 2 || ((p == 2 || p == -2) != plus_minus)) {
          ok = false;
          detail = to_string(a.coords) + "·" + to_string(b.coords) + " = " + std::to_string(p);
          break;
        }
      }
      if (!ok) break;
    }
    add("pairings lie in [-2,2], ±2 only for ±a", ok, detail);
  }
  add("classical: finite", roots.complete);
  {
    std::vector<IntVector> rows;
    for (const auto& r : roots.roots) rows.push_back(r.coords);
    add("classical: roots span the real space", matrix_rank(IntMatrix::from_rows(rows)) == n);
  }
  {
    double bound = 1;
    for (std::size_t i = 0; i < n; ++i) bound *= 3;
    bound += static_cast<double>(n);
    add("root count at most 3^rank + rank", static_cast<double>(roots.size()) <= bound,
        std::to_string(roots.size()));
  }
  add("Coxeter matrix preserves the Cartan form", preserves_form(grs, coxeter_matrix(grs).matrix));
  return report;
}

Components irreducible_components(const GrsPresentation& grs) {
  const std::size_t n = grs.rank();
  Components out;
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  auto find = [&label](std::size_t x) {
    while (label[x] != x) x = label[x] = label[label[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) label[std::max(a, b)] = std::min(a, b);
  };

  if (grs.positive_definite()) {
    // Components of the root graph; every root lies in the component of the
    // basis roots in its support, so tracking basis indices is enough.
    const RootSet roots = enumerate_roots(grs);
    std::vector<std::size_t> comp(roots.size());
    std::vector<std::size_t> parent(roots.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto rfind = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (grs.pairing(roots.roots[i], roots.roots[j]) != 0) {
          const auto a = rfind(i), b = rfind(j);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::size_t> basis_pos(n);
    for (std::size_t i = 0; i < n; ++i)
      basis_pos[i] = static_cast<std::size_t>(
          std::lower_bound(roots.roots.begin(), roots.roots.end(), basis_root(n, i)) - roots.roots.begin());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rfind(basis_pos[i]) == rfind(basis_pos[j])) unite(i, j);
  } else {
    out.heuristic = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (grs.cartan()(i, j) != 0) unite(i, j);
  }

  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  for (auto& part : by_root)
    if (!part.empty()) out.parts.push_back(std::move(part));
  return out;
}

RootSet subsystem_closure(const GrsPresentation& grs, std::span<const Root> seeds) {
  const RootSet all = enumerate_roots(grs);
  std::set<Root> closure;
  std::vector<Root> members;
  auto add = [&](const Root& r) {
    if (closure.insert(r).second) members.push_back(r);
  };
  for (const auto& s : seeds) {
    if (!all.contains(s)) throw Error(ErrorKind::SeedNotRoot, to_string(s.coords) + " is not a real root");
    add(s);
    add(negate(s));
  }
  // Every pair (a, b) is reflected once: b against all earlier members when b
  // arrives, and later members against b as they arrive.
  for (std::size_t j = 0; j < members.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      add(Root{reflect(grs, members[j].coords, members[i])});
      add(Root{reflect(grs, members[i].coords, members[j])});
    }
  }
  RootSet out;
  out.complete = true;
  out.roots.assign(closure.begin(), closure.end());
  return out;
}

}  // namespace grs
