#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "grs/error.hpp"
#include "grs/linalg.hpp"

using namespace grs;

namespace {

// Cofactor expansion along the first row; exponential, used only as an
// independent reference on small matrices.
BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const BigInt minor = cofactor_det(m.submatrix(rows, cols));
    const BigInt term = BigInt(static_cast<long>(m(0, j))) * minor;
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix symmetric_random(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
  IntMatrix m = random_matrix(rng, n, n, lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

}  // namespace

TEST_CASE("checked arithmetic reports overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big, 2), Error);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), Error);
  try {
    checked_mul(big, big);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK_THROWS_AS(to_int(BigInt("100000000000000000000")), Error);
}

TEST_CASE("matrix basics") {
  const IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a * a == IntMatrix{{7, 10}, {15, 22}});
  CHECK(a.column(1) == IntVector{2, 4});
  CHECK(IntMatrix::from_columns({{1, 3}, {2, 4}}) == a);
  CHECK(bilinear(a, IntVector{1, 0}, IntVector{0, 1}) == 2);
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(a * IntMatrix(3, 1), Error);
}

TEST_CASE("determinant") {
  CHECK(det_exact(IntMatrix{{2}}) == 2);
  CHECK(det_exact(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(det_exact(IntMatrix{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}) == 0);
  CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);  // needs a pivot swap
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), Error);

  SUBCASE("agrees with cofactor expansion, including entries near 2^62") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const Int bound = trial % 3 == 0 ? (Int{1} << 62) : 4;
      const IntMatrix m = random_matrix(rng, n, n, -bound, bound);
      CHECK(det_exact(m) == cofactor_det(m));
    }
  }
  SUBCASE("multiplicative") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const IntMatrix a = random_matrix(rng, n, n, -3, 3), b = random_matrix(rng, n, n, -3, 3);
      CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
  }
}

TEST_CASE("integer kernel") {
  const KernelBasis k = integer_kernel(IntMatrix{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
  CHECK(k.rank == 2);
  CHECK(k.vectors == std::vector<IntVector>{{1, 0, -1}, {0, 1, -1}});
  CHECK(integer_kernel(IntMatrix{{2, -1}, {-1, 2}}).rank == 0);
  // Primitive generator even though the rational kernel is spanned by (2, 4).
  CHECK(integer_kernel(IntMatrix{{2, -1}}).vectors == std::vector<IntVector>{{1, 2}});

  SUBCASE("random: vectors lie in the kernel, rank is the nullity, basis is canonical") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 6;
      const IntMatrix m = random_matrix(rng, r, c, -2, 2);
      const KernelBasis kb = integer_kernel(m);
      CHECK(kb.rank == c - matrix_rank(m));
      CHECK(kb.vectors.size() == kb.rank);
      for (const auto& v : kb.vectors) CHECK(m * std::span<const Int>(v) == IntVector(r, 0));
      // Left multiplication by a unimodular matrix keeps the kernel.
      IntMatrix u = IntMatrix::identity(r);
      if (r >= 2) u(0, 1) = 3;
      CHECK(integer_kernel(u * m).vectors == kb.vectors);
    }
  }
}

TEST_CASE("rank and hermite basis") {
  CHECK(matrix_rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank(IntMatrix(3, 3)) == 0);
  CHECK(hermite_basis({{2, 0}, {0, 2}, {1, 1}}) == std::vector<IntVector>{{1, 1}, {0, 2}});
  CHECK(hermite_basis({{1, 0}, {0, 1}, {1, 1}}) == std::vector<IntVector>{{1, 0}, {0, 1}});
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(IntMatrix{{2}}));
  CHECK(is_positive_definite(IntMatrix{{2, -1}, {-1, 2}}));
  CHECK_FALSE(is_positive_definite(IntMatrix{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}}));
  CHECK_FALSE(is_positive_definite(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));  // affine, semidefinite
  CHECK_FALSE(is_positive_definite(IntMatrix{{2, -3}, {-3, 2}}));
  CHECK_THROWS_AS(is_positive_definite(IntMatrix{{2, 1}, {0, 2}}), Error);

  SUBCASE("agrees with leading minors and a sign test on small vectors") {
    std::mt19937_64 rng(4);
    int definite = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 4;
      IntMatrix m = symmetric_random(rng, n, -1, 1);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
      bool minors_positive = true;
      for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        minors_positive = minors_positive && cofactor_det(m.submatrix(idx, idx)) > 0;
      }
      const bool pd = is_positive_definite(m);
      CHECK(pd == minors_positive);
      definite += pd;
      // A definite form is positive on every nonzero vector of the box.
      if (pd) {
        std::vector<Int> v(n, -2);
        while (true) {
          if (std::any_of(v.begin(), v.end(), [](Int x) { return x != 0; })) CHECK(bilinear(m, v, v) > 0);
          std::size_t i = 0;
          while (i < n && v[i] == 2) v[i++] = -2;
          if (i == n) break;
          ++v[i];
        }
      }
    }
    CHECK(definite > 0);
  }
}

TEST_CASE("rational solver") {
  SUBCASE("unique") {
    const SolveResult s = solve_rational(IntMatrix{{2, 1}, {1, 3}}, IntVector{3, 5});
    REQUIRE(s.unique());
    CHECK(s.solution[0] == Rational(4, 5));
    CHECK(s.solution[1] == Rational(7, 5));
  }
  SUBCASE("overdetermined but consistent") {
    const SolveResult s = solve_rational(IntMatrix{{1, 0}, {0, 1}, {1, 1}}, IntVector{2, 3, 5});
    REQUIRE(s.unique());
    CHECK(s.solution[1] == 3);
  }
  SUBCASE("inconsistent") {
    CHECK(solve_rational(IntMatrix{{1, 1}, {1, 1}}, IntVector{1, 2}).status == SolveResult::Status::NoSolution);
  }
  SUBCASE("underdetermined") {
    const SolveResult s = solve_rational(IntMatrix{{1, 1}}, IntVector{1});
    CHECK(s.status == SolveResult::Status::NonUnique);
    CHECK(s.nullity == 1);
  }
  SUBCASE("random systems with a planted solution") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 6;
      IntMatrix a = random_matrix(rng, n, n, -5, 5);
      if (det_exact(a) == 0) continue;
      const IntMatrix x = random_matrix(rng, n, 1, -9, 9);
      const IntVector b = (a * x).column(0);
      const SolveResult s = solve_rational(a, b);
      REQUIRE(s.unique());
      for (std::size_t i = 0; i < n; ++i) CHECK(s.solution[i] == x(i, 0));
    }
  }
}
