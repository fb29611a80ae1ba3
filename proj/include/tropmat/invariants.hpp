#pragma once

#include <string>
#include <vector>

#include "tropmat/cell_complex.hpp"
#include "tropmat/polytope.hpp"

namespace tropmat {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every structural property of the polytope and its complex that can be
/// checked from the matroid alone: exchange, type unions, corners, closed-form
/// types against direct evaluation, witnesses, dimensions, Euler relation,
/// bounded-cell agreement, formula against enumeration, ideal properties.
std::vector<CheckResult> run_invariant_suite(const PolytopeModel& p,
                                             const EnumerationOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace tropmat
