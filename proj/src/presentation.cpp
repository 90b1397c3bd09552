#include "grs/presentation.hpp"

#include "grs/error.hpp"

namespace grs {

Root basis_root(std::size_t rank, std::size_t index) {
  Root r{IntVector(rank, 0)};
  r.coords.at(index) = 1;
  return r;
}

Root negate(const Root& r) {
  Root out = r;
  for (auto& x : out.coords) x = checked_sub(0, x);
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return {a.matrix * b.matrix}; }

GrsPresentation::GrsPresentation(IntMatrix cartan) : cartan_(std::move(cartan)) {
  if (!cartan_.is_square()) throw Error(ErrorKind::NonSquare, "Cartan matrix must be square");
  for (std::size_t i = 0; i < cartan_.rows(); ++i)
    for (std::size_t j = i + 1; j < cartan_.cols(); ++j)
      if (cartan_(i, j) != cartan_(j, i))
        throw Error(ErrorKind::NotSymmetric, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") differs from its transpose");
  for (std::size_t i = 0; i < cartan_.rows(); ++i)
    if (cartan_(i, i) != 2)
      throw Error(ErrorKind::BadDiagonal, "diagonal entry " + std::to_string(i) + " is " +
                                              std::to_string(cartan_(i, i)) + ", expected 2");
}

IntVector reflect(const GrsPresentation& grs, std::span<const Int> v, const Root& root) {
  const Int c = grs.pairing(v, root.coords);
  IntVector out(v.begin(), v.end());
  if (c != 0)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], checked_mul(c, root.coords[i]));
  return out;
}

WeylElement reflection_matrix(const GrsPresentation& grs, const Root& root) {
  if (root.size() != grs.rank()) throw Error(ErrorKind::ShapeMismatch, "root length differs from rank");
  if (grs.norm(root) != 2) throw Error(ErrorKind::NormNotTwo, "root " + to_string(root.coords) + " has norm " +
                                                                   std::to_string(grs.norm(root)));
  const std::size_t n = grs.rank();
  // Column j: e_j − I(e_j, root)·root.
  const IntVector ir = grs.cartan() * std::span<const Int>(root.coords);
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = checked_sub(m(i, j), checked_mul(ir[j], root.coords[i]));
  return {std::move(m)};
}

WeylElement coxeter_matrix(const GrsPresentation& grs) {
  WeylElement c{IntMatrix::identity(grs.rank())};
  for (std::size_t i = 0; i < grs.rank(); ++i) c = c * reflection_matrix(grs, basis_root(grs.rank(), i));
  return c;
}

bool preserves_form(const GrsPresentation& grs, const IntMatrix& m) {
  return m.transpose() * grs.cartan() * m == grs.cartan();
}

CoxeterOrder matrix_order(const IntMatrix& m, std::uint64_t cap) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix power = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power == id) return {k, cap};
    if (k == cap) break;
    try {
      power = power * m;
    } catch (const Error& e) {
      // Entries outgrew 64 bits: the powers are unbounded, so no finite order.
      if (e.kind() == ErrorKind::Overflow) break;
      throw;
    }
  }
  return {std::nullopt, cap};
}

CoxeterOrder coxeter_order(const GrsPresentation& grs, std::uint64_t cap) {
  return matrix_order(coxeter_matrix(grs).matrix, cap);
}

EulerForm euler_form(const GrsPresentation& grs) {
  const std::size_t n = grs.rank();
  IntMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) x(i, j) = grs.cartan()(i, j);
  }
  return {std::move(x)};
}

namespace {

// Unknowns X_ij at index i·n + j. Rows 0..n²−1: X_ij + X_ji = I_ij.
// Rows n²..2n²−1: (X·C)_ij + X_ji = 0.
struct EulerLinearSystem {
  IntMatrix matrix;
  IntVector rhs;
};

EulerLinearSystem euler_linear_system(const GrsPresentation& grs) {
  const std::size_t n = grs.rank();
  const IntMatrix& cartan = grs.cartan();
  const IntMatrix cox = coxeter_matrix(grs).matrix;
  const std::size_t unknowns = n * n;
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
  EulerLinearSystem sys{IntMatrix(2 * unknowns, unknowns), IntVector(2 * unknowns, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = var(i, j);
      sys.matrix(row, var(i, j)) += 1;
      sys.matrix(row, var(j, i)) += 1;
      sys.rhs[row] = cartan(i, j);

      const std::size_t twist = unknowns + var(i, j);
      for (std::size_t k = 0; k < n; ++k) sys.matrix(twist, var(i, k)) += cox(k, j);
      sys.matrix(twist, var(j, i)) += 1;
    }
  }
  return sys;
}

IntMatrix unflatten(const IntVector& v, std::size_t n) {
  IntMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = v[i * n + j];
  return x;
}

}  // namespace

EulerSystemReport euler_system(const GrsPresentation& grs) {
  const EulerLinearSystem sys = euler_linear_system(grs);
  const SolveResult solved = solve_rational(sys.matrix, std::span<const Int>(sys.rhs));
  EulerSystemReport report;
  report.consistent = solved.status != SolveResult::Status::NoSolution;
  for (const auto& v : integer_kernel(sys.matrix).vectors) report.homogeneous.push_back(unflatten(v, grs.rank()));
  return report;
}

EulerForm solve_euler_uniqueness(const GrsPresentation& grs) {
  const std::size_t n = grs.rank();
  const EulerLinearSystem sys = euler_linear_system(grs);
  const SolveResult solved = solve_rational(sys.matrix, std::span<const Int>(sys.rhs));
  if (solved.status == SolveResult::Status::NoSolution)
    throw Error(ErrorKind::VerificationFailure, "Euler form system has no solution");
  if (!solved.unique())
    throw Error(ErrorKind::VerificationFailure,
                "Euler form system has a " + std::to_string(solved.nullity) + "-dimensional solution space");

  IntMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = solved.solution[i * n + j];
      if (v.get_den() != 1) throw Error(ErrorKind::VerificationFailure, "Euler form solution is not integral");
      x(i, j) = to_int(v.get_num());
    }
  }
  EulerForm solved_form{std::move(x)};
  if (solved_form != euler_form(grs))
    throw Error(ErrorKind::VerificationFailure, "solved Euler form " + to_string(solved_form.matrix) +
                                                    " differs from the upper-triangular construction");
  return solved_form;
}

KernelBasis radical(const GrsPresentation& grs) { return integer_kernel(grs.cartan()); }

GrsPresentation direct_sum(const GrsPresentation& a, const GrsPresentation& b) {
  const std::size_t n = a.rank();
  IntMatrix m(n + b.rank(), n + b.rank());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a.cartan()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) m(n + i, n + j) = b.cartan()(i, j);
  return GrsPresentation(std::move(m));
}

GrsPresentation restrict_to(const GrsPresentation& grs, std::span<const std::size_t> indices) {
  return GrsPresentation(grs.cartan().submatrix(indices, indices));
}

GrsPresentation presentation_on(const GrsPresentation& grs, std::span<const Root> basis) {
  IntMatrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = grs.pairing(basis[i], basis[j]);
  return GrsPresentation(std::move(gram));
}

}  // namespace grs
