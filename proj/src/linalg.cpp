#include "grs/linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "grs/error.hpp"

namespace grs {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer multiplication");
  return out;
}

Int to_int(const BigInt& value) {
  if (!value.fits_slong_p()) throw Error(ErrorKind::Overflow, "value " + value.get_str() + " exceeds 64 bits");
  return static_cast<Int>(value.get_si());
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  return from_rows(columns).transpose();
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

Int IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = at(rows[i], cols[j]);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int bkj = b(k, j);
        if (bkj != 0) out(i, j) = checked_add(out(i, j), checked_mul(aik, bkj));
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_add(a(i, j), b(i, j));
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix difference");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_sub(a(i, j), b(i, j));
  return out;
}

IntMatrix operator-(const IntMatrix& a) { return IntMatrix(a.rows(), a.cols()) - a; }

IntVector operator*(const IntMatrix& m, std::span<const Int> v) {
  if (m.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector product");
  IntVector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0 && m(i, j) != 0) acc = checked_add(acc, checked_mul(m(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Int bilinear(const IntMatrix& m, std::span<const Int> u, std::span<const Int> v) {
  if (m.rows() != u.size() || m.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "bilinear form");
  Int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m(i, j) != 0) row = checked_add(row, checked_mul(m(i, j), v[j]));
    acc = checked_add(acc, checked_mul(u[i], row));
  }
  return acc;
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

using BigRows = std::vector<std::vector<BigInt>>;

BigRows to_big(const IntMatrix& m) {
  BigRows out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<long>(m(r, c));
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Unimodular row reduction to echelon form, pivoting only in the first
// `pivot_cols` columns. With `reduce`, entries above each pivot are brought
// into [0, pivot). Returns the number of pivot rows.
std::size_t integer_echelon(BigRows& a, std::size_t pivot_cols, bool reduce) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.size(); ++c) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      if (a[r][c] == 0) {
        std::swap(a[r], a[i]);
        continue;
      }
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      const BigInt u = a[r][c] / g;
      const BigInt v = a[i][c] / g;
      for (std::size_t k = 0; k < a[r].size(); ++k) {
        const BigInt x = a[r][k];
        const BigInt y = a[i][k];
        a[r][k] = s * x + t * y;
        a[i][k] = u * y - v * x;
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    if (reduce) {
      for (std::size_t i = 0; i < r; ++i) {
        if (a[i][c] == 0) continue;
        const BigInt q = floor_div(a[i][c], a[r][c]);
        for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] -= q * a[r][k];
      }
    }
    ++r;
  }
  return r;
}

IntVector to_int_vector(const std::vector<BigInt>& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_int(v[i]);
  return out;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "det_exact needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigRows a = to_big(m);
  BigInt sign = 1;
  BigInt prev = 1;
  // Bareiss: after step k every a[i][j] (i,j > k) is a (k+2)-minor, so the
  // division by the previous pivot is exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

KernelBasis integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  // Rows of [mᵀ | I]; a unimodular reduction of the left block leaves the
  // kernel lattice in the right block of the zero rows.
  BigRows a(n, std::vector<BigInt>(m.rows() + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) a[i][j] = static_cast<long>(m(j, i));
    a[i][m.rows() + i] = 1;
  }
  const std::size_t pivots = integer_echelon(a, m.rows(), false);
  BigRows kernel;
  for (std::size_t i = pivots; i < n; ++i)
    kernel.emplace_back(a[i].begin() + static_cast<std::ptrdiff_t>(m.rows()), a[i].end());
  const std::size_t rank = integer_echelon(kernel, n, true);
  KernelBasis out;
  out.rank = rank;
  for (std::size_t i = 0; i < rank; ++i) out.vectors.push_back(to_int_vector(kernel[i]));
  return out;
}

std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  BigRows a = to_big(IntMatrix::from_rows(rows));
  const std::size_t rank = integer_echelon(a, rows.front().size(), true);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(to_int_vector(a[i]));
  return out;
}

std::size_t matrix_rank(const IntMatrix& m) { return m.cols() - integer_kernel(m).rank; }

bool is_positive_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "is_positive_definite needs a symmetric matrix");
  const std::size_t n = m.rows();
  BigRows a = to_big(m);
  BigInt prev = 1;
  // Without pivoting, the k-th Bareiss pivot is the k-th leading principal minor.
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return true;
}

SolveResult solve_rational(const IntMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_rational right-hand side");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = static_cast<long>(a(r, c));
    m[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k <= cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  SolveResult out;
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) {
      out.status = SolveResult::Status::NoSolution;
      return out;
    }
  }
  out.nullity = cols - r;
  out.status = out.nullity == 0 ? SolveResult::Status::Unique : SolveResult::Status::NonUnique;
  out.solution.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.solution[pivot_col[i]] = m[i][cols];
  return out;
}

SolveResult solve_rational(const IntMatrix& a, std::span<const Int> b) {
  std::vector<Rational> rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = static_cast<long>(b[i]);
  return solve_rational(a, std::span<const Rational>(rhs));
}

}  // namespace grs
