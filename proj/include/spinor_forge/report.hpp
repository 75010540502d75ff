#ifndef SPINOR_FORGE_REPORT_HPP
#define SPINOR_FORGE_REPORT_HPP

#include "spinor_forge/catalog.hpp"

#include <string>
#include <vector>

namespace spinor_forge {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
  /// Limit folded into `pass`; 0 when the criterion is untimed.
  double time_limit = 0;
};

/// Runs the twelve regression criteria against the given catalog. Failures
/// are data; an exception inside a criterion is reported as a failing row.
std::vector<CriterionResult> run_report(const CatalogSource& catalog = default_catalog());

/// Single criterion, 1-based.
CriterionResult run_criterion(int id, const CatalogSource& catalog = default_catalog());

constexpr int kCriterionCount = 12;

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_REPORT_HPP
