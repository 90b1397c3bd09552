#pragma once

// The acceptance suite: ten exact checks over the corpus, each reported as a
// single pass/fail result.

#include <functional>
#include <string>
#include <vector>

namespace grs::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // counts on success, the first failure otherwise
};

// Number of distinct catalog entries of rank ≤ 8, fixed when the catalog
// was transcribed.
inline constexpr std::size_t kExpectedCatalogSize = 39;

// Runs every criterion in order; `on_result` (if given) sees each result as
// soon as it is available.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

std::string format(const CriterionResult& r);

}  // namespace grs::acceptance
