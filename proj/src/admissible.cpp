#include <algorithm>
#include <numeric>

#include "grs/carter.hpp"
#include "grs/error.hpp"

namespace grs {

std::vector<Root> AdmissibleRep::roots() const {
  std::vector<Root> all = group1;
  all.insert(all.end(), group2.begin(), group2.end());
  return all;
}

std::vector<Root> search_order(const RootSet& roots, SearchOrder order) {
  std::vector<Root> out = positive_roots(roots);
  auto height = [](const Root& r) { return std::accumulate(r.coords.begin(), r.coords.end(), Int{0}); };
  std::stable_sort(out.begin(), out.end(), [&](const Root& a, const Root& b) {
    const Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return b < a;
  });
  if (order == SearchOrder::Reverse) std::reverse(out.begin(), out.end());
  return out;
}

WeylElement reflection_product(const GrsPresentation& grs, const std::vector<Root>& roots) {
  WeylElement w{IntMatrix::identity(grs.rank())};
  for (const auto& r : roots) w = w * reflection_matrix(grs, r);
  return w;
}

namespace {

bool independent(const std::vector<Root>& roots) {
  if (roots.empty()) return true;
  std::vector<IntVector> rows;
  for (const auto& r : roots) rows.push_back(r.coords);
  return matrix_rank(IntMatrix::from_rows(rows)) == roots.size();
}

bool generates(const GrsPresentation& grs, const std::vector<Root>& roots, std::size_t total) {
  return subsystem_closure(grs, roots).size() == total;
}

std::size_t fixed_dimension(const WeylElement& w) {
  return integer_kernel(w.matrix - IntMatrix::identity(w.matrix.rows())).rank;
}

class RepSearch {
 public:
  RepSearch(const GrsPresentation& grs, const WeylElement& w, SearchOrder order, DiagramFilter filter)
      : grs_(grs), w_(w), filter_(filter), all_(enumerate_roots(grs)), candidates_(search_order(all_, order)) {
    const std::size_t m = candidates_.size();
    reflections_.reserve(m);
    for (const auto& r : candidates_) reflections_.push_back(reflection_matrix(grs_, r).matrix);
    orthogonal_.assign(m * m, false);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) orthogonal_[i * m + j] = grs_.pairing(candidates_[i], candidates_[j]) == 0;
    length_ = grs.rank() - fixed_dimension(w);
  }

  std::optional<AdmissibleRep> run() {
    if (length_ == 0) return std::nullopt;
    // Group-1 sizes from ⌈l/2⌉ down to 1, then upwards to l.
    std::vector<std::size_t> sizes;
    const std::size_t half = (length_ + 1) / 2;
    for (std::size_t k = half; k >= 1; --k) sizes.push_back(k);
    for (std::size_t k = half + 1; k <= length_; ++k) sizes.push_back(k);
    for (std::size_t k1 : sizes) {
      target_ = k1;
      chosen_.clear();
      if (auto rep = extend(0, IntMatrix::identity(grs_.rank()))) return rep;
    }
    return std::nullopt;
  }

 private:
  bool orthogonal(std::size_t i, std::size_t j) const { return orthogonal_[i * candidates_.size() + j]; }

  std::optional<AdmissibleRep> extend(std::size_t start, const IntMatrix& sigma1) {
    if (chosen_.size() == target_) return complete(sigma1);
    const std::size_t need = target_ - chosen_.size();
    for (std::size_t i = start; i + need <= candidates_.size(); ++i) {
      if (!std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t c) { return orthogonal(c, i); })) continue;
      chosen_.push_back(i);
      auto rep = extend(i + 1, sigma1 * reflections_[i]);
      chosen_.pop_back();
      if (rep) return rep;
    }
    return std::nullopt;
  }

  std::optional<AdmissibleRep> complete(const IntMatrix& sigma1) {
    const std::size_t n = grs_.rank();
    const IntMatrix id = IntMatrix::identity(n);
    // σ1 is an involution, so σ2 = σ1⁻¹·w = σ1·w.
    IntMatrix sigma2 = sigma1 * w_.matrix;
    if (sigma2 * sigma2 != id) return std::nullopt;

    AdmissibleRep rep;
    for (std::size_t c : chosen_) rep.group1.push_back(candidates_[c]);
    // Peel orthogonal roots off the (−1)-eigenspace, least root first.
    while (sigma2 != id) {
      if (rep.size() == length_) return std::nullopt;
      bool found = false;
      for (std::size_t i = 0; i < candidates_.size(); ++i) {
        const IntVector image = sigma2 * std::span<const Int>(candidates_[i].coords);
        if (image == negate(candidates_[i]).coords) {
          rep.group2.push_back(candidates_[i]);
          sigma2 = sigma2 * reflections_[i];
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
    if (rep.size() != length_) return std::nullopt;
    const auto roots = rep.roots();
    if (!independent(roots) || !generates(grs_, roots, all_.size())) return std::nullopt;
    if (filter_ == DiagramFilter::InCatalog && !classify_diagram(diagram_of(grs_, rep))) return std::nullopt;
    return rep;
  }

  const GrsPresentation& grs_;
  const WeylElement& w_;
  DiagramFilter filter_;
  RootSet all_;
  std::vector<Root> candidates_;
  std::vector<IntMatrix> reflections_;
  std::vector<bool> orthogonal_;
  std::size_t length_ = 0;
  std::size_t target_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<AdmissibleRep> find_admissible_representation(const GrsPresentation& grs, const WeylElement& w,
                                                            SearchOrder order, DiagramFilter filter) {
  if (!grs.positive_definite())
    throw Error(ErrorKind::NotPositiveDefinite, "admissible representations need a positive definite Cartan form");
  if (w.matrix.rows() != grs.rank() || !preserves_form(grs, w.matrix))
    throw Error(ErrorKind::VerificationFailure, "element does not preserve the Cartan form");
  return RepSearch(grs, w, order, filter).run();
}

AdmissibleRep admissible_representation(const GrsPresentation& grs, const WeylElement& w, SearchOrder order,
                                        DiagramFilter filter) {
  auto rep = find_admissible_representation(grs, w, order, filter);
  if (!rep) throw Error(ErrorKind::SearchExhausted, "no admissible representation of " + to_string(w.matrix));
  return *std::move(rep);
}

Verdict verify_admissible(const GrsPresentation& grs, const WeylElement& w, const AdmissibleRep& rep) {
  Verdict v;
  const RootSet all = enumerate_roots(grs);
  const auto roots = rep.roots();
  for (const auto& r : roots)
    if (!all.contains(r)) v.reasons.push_back(to_string(r.coords) + " is not a real root");
  if (!v.reasons.empty()) return v;
  if (rep.group1.empty()) v.reasons.push_back("first group is empty");

  auto check_orthogonal = [&](const std::vector<Root>& group, const char* label) {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (const Int p = grs.pairing(group[i], group[j]); p != 0)
          v.reasons.push_back(std::string(label) + " not orthogonal: " + to_string(group[i].coords) + "·" +
                              to_string(group[j].coords) + " = " + std::to_string(p));
  };
  check_orthogonal(rep.group1, "group 1");
  check_orthogonal(rep.group2, "group 2");

  if (!independent(roots)) v.reasons.push_back("roots are linearly dependent");
  if (reflection_product(grs, roots) != w) v.reasons.push_back("reflection product differs from the element");
  if (const auto closure = subsystem_closure(grs, roots); closure.size() != all.size())
    v.reasons.push_back("reflections generate a subsystem of " + std::to_string(closure.size()) + " of " +
                        std::to_string(all.size()) + " roots");
  v.ok = v.reasons.empty();
  return v;
}

CarterDiagram diagram_of(const GrsPresentation& grs, const AdmissibleRep& rep) {
  const auto roots = rep.roots();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Int p = grs.pairing(roots[i], roots[j]);
      if (p < -1 || p > 1)
        throw Error(ErrorKind::InternalError, "pairing " + std::to_string(p) + " between distinct representation roots");
      if (p != 0) edges.emplace_back(i, j);
    }
  }
  return CarterDiagram(roots.size(), edges);
}

}  // namespace grs
