#include "grs/morphism.hpp"

#include "grs/error.hpp"
#include "grs/weyl.hpp"

namespace grs {

MorphismReport is_morphism(const LatticeMap& map, std::optional<std::size_t> depth) {
  const IntMatrix& m = map.matrix;
  if (m.rows() != map.target.rank() || m.cols() != map.source.rank())
    throw Error(ErrorKind::ShapeMismatch, "map matrix must be rank(target) x rank(source)");

  const bool target_pd = map.target.positive_definite();
  if (!target_pd && !depth)
    throw Error(ErrorKind::TargetNotEnumerable, "target is not positive definite and no depth bound was given");

  MorphismReport report;
  report.isometry = m.transpose() * map.target.cartan() * m == map.source.cartan();
  if (!report.isometry) report.notes.push_back("map does not preserve the Cartan form");

  report.commutes = m * coxeter_matrix(map.source).matrix == coxeter_matrix(map.target).matrix * m;
  if (!report.commutes) report.notes.push_back("map does not intertwine the Coxeter matrices");

  // Images of the basis suffice: φ∘r_α = r_φ(α)∘φ carries W·B onto W'·φ(B).
  RootSet roots;
  if (target_pd) {
    roots = enumerate_roots(map.target);
  } else {
    roots = enumerate_roots_bounded(map.target, *depth);
    if (!roots.complete) report.depth = depth;
  }
  report.roots = RootMembership::Verified;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const IntVector image = m.column(j);
    if (roots.contains(image)) continue;
    const bool decided = roots.complete || bilinear(map.target.cartan(), image, image) != 2;
    report.roots = decided ? RootMembership::Failed : RootMembership::NotFoundUpToDepth;
    report.notes.push_back("image of basis root " + std::to_string(j) + ", " + to_string(image) +
                           (decided ? ", is not a real root of the target"
                                    : ", not reached within depth " + std::to_string(*depth)));
    if (decided) break;
  }
  return report;
}

}  // namespace grs
