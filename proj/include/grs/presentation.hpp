#pragma once

// Simply-laced generalized root systems presented by a symmetric integer
// Cartan matrix with diagonal 2. The root basis is the standard basis of the
// lattice, in row order, and the Coxeter transformation is the product of the
// basis reflections in that order.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grs/linalg.hpp"

namespace grs {

struct Root {
  IntVector coords;

  std::size_t size() const noexcept { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
};

Root basis_root(std::size_t rank, std::size_t index);
Root negate(const Root& r);

// Column j is the image of basis vector j.
struct WeylElement {
  IntMatrix matrix;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

WeylElement operator*(const WeylElement& a, const WeylElement& b);

struct EulerForm {
  IntMatrix matrix;

  friend bool operator==(const EulerForm&, const EulerForm&) = default;
};

class GrsPresentation {
 public:
  // Throws NotSymmetric / BadDiagonal / NonSquare.
  explicit GrsPresentation(IntMatrix cartan);

  std::size_t rank() const noexcept { return cartan_.rows(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }

  Int pairing(std::span<const Int> u, std::span<const Int> v) const { return bilinear(cartan_, u, v); }
  Int pairing(const Root& u, const Root& v) const { return pairing(u.coords, v.coords); }
  Int norm(const Root& r) const { return pairing(r, r); }

  bool positive_definite() const { return is_positive_definite(cartan_); }

  friend bool operator==(const GrsPresentation&, const GrsPresentation&) = default;

 private:
  IntMatrix cartan_;
};

// r_root(v) = v − I(v, root)·root. The root must have norm 2; not checked here.
IntVector reflect(const GrsPresentation& grs, std::span<const Int> v, const Root& root);

WeylElement reflection_matrix(const GrsPresentation& grs, const Root& root);
WeylElement coxeter_matrix(const GrsPresentation& grs);

// Preserves the Cartan form: Mᵀ·I·M = I.
bool preserves_form(const GrsPresentation& grs, const IntMatrix& m);

struct CoxeterOrder {
  std::optional<std::uint64_t> order;  // empty when no power up to cap is the identity
  std::uint64_t cap = 0;
};

inline constexpr std::uint64_t kDefaultOrderCap = 10'000;

CoxeterOrder coxeter_order(const GrsPresentation& grs, std::uint64_t cap = kDefaultOrderCap);
CoxeterOrder matrix_order(const IntMatrix& m, std::uint64_t cap);

EulerForm euler_form(const GrsPresentation& grs);

// Solves X + Xᵀ = I and X·C = −Xᵀ from scratch and checks that the answer is
// unique, integral and equal to euler_form(grs). Throws VerificationFailure
// otherwise.
EulerForm solve_euler_uniqueness(const GrsPresentation& grs);

// The same linear system without the uniqueness demand: whether it is
// solvable and an integer basis of its homogeneous solutions (matrices Y
// with Y + Yᵀ = 0 and Y·C = −Yᵀ). Every solution is X + Σ t_k·Y_k with X
// the constructive form.
struct EulerSystemReport {
  bool consistent = false;
  std::vector<IntMatrix> homogeneous;

  std::size_t solution_dimension() const noexcept { return homogeneous.size(); }
};

EulerSystemReport euler_system(const GrsPresentation& grs);

KernelBasis radical(const GrsPresentation& grs);

// Orthogonal direct sum; the basis of `a` comes first.
GrsPresentation direct_sum(const GrsPresentation& a, const GrsPresentation& b);

// Presentation on the sub-basis `indices` (in the given order).
GrsPresentation restrict_to(const GrsPresentation& grs, std::span<const std::size_t> indices);

// Presentation whose root basis is the given list of roots of `grs`: the
// Cartan matrix is their Gram matrix.
GrsPresentation presentation_on(const GrsPresentation& grs, std::span<const Root> basis);

}  // namespace grs
