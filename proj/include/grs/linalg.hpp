#pragma once

// Exact integer and rational linear algebra. Matrices hold machine integers
// with overflow-checked arithmetic; every elimination runs on GMP integers or
// rationals so intermediate growth never wraps.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grs {

using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int to_int(const BigInt& value);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& at(std::size_t r, std::size_t c);
  Int at(std::size_t r, std::size_t c) const;

  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector column(std::size_t c) const;
  std::span<const Int> data() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntVector operator*(const IntMatrix& m, std::span<const Int> v);

// Bilinear evaluation uᵀ·m·v.
Int bilinear(const IntMatrix& m, std::span<const Int> u, std::span<const Int> v);

std::string to_string(const IntMatrix& m);
std::string to_string(std::span<const Int> v);

// Integer kernel {x ∈ Zⁿ : m·x = 0} in Hermite normal form: each basis vector
// has a positive leading entry and entries above pivots are reduced modulo
// the pivot, so equal lattices give equal bases.
struct KernelBasis {
  std::vector<IntVector> vectors;
  std::size_t rank = 0;
};

BigInt det_exact(const IntMatrix& m);
KernelBasis integer_kernel(const IntMatrix& m);
std::size_t matrix_rank(const IntMatrix& m);
bool is_positive_definite(const IntMatrix& m);

// Row-style Hermite normal form of the lattice spanned by the given rows;
// zero rows are dropped.
std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows);

struct SolveResult {
  enum class Status { Unique, NoSolution, NonUnique };
  Status status = Status::NoSolution;
  // One particular solution (Unique or NonUnique); empty for NoSolution.
  std::vector<Rational> solution;
  std::size_t nullity = 0;

  bool unique() const noexcept { return status == Status::Unique; }
};

SolveResult solve_rational(const IntMatrix& a, std::span<const Rational> b);
SolveResult solve_rational(const IntMatrix& a, std::span<const Int> b);

}  // namespace grs
