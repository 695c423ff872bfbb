#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cvdj::harness {

struct CriterionResult {
  int id;
  std::string claim;
  std::string computed;
  std::string tolerance;
  bool pass;
  double seconds;
  /// Reported for context; does not count toward the verdict.
  bool informational = false;
};

struct AcceptanceOptions {
  /// Test hook: replaces the first criterion's tolerance with an
  /// unsatisfiable one so the harness failure path can be exercised.
  bool corrupt_tolerance = false;
};

inline constexpr int kCriterionCount = 8;

/// Rows for one criterion, 1 <= id <= kCriterionCount.
std::vector<CriterionResult> run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// True iff every non-informational row passes.
bool all_pass(std::span<const CriterionResult> rows);

/// One line per row: verdict, id, claim, computed value, tolerance, seconds.
void print_results(std::ostream& out, std::span<const CriterionResult> rows);

}  // namespace cvdj::harness
