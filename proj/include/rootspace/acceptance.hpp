#pragma once

#include <string>
#include <vector>

namespace rootspace {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Criteria 1..11.
std::vector<int> criterion_ids();
/// quick shrinks the sweep sizes (smaller affine windows, ranks <= 5); never the checks.
CriterionResult run_criterion(int id, bool quick);
std::vector<CriterionResult> run_acceptance(bool quick);

/// "[PASS] 3 affine-psp (1.2s): detail".
std::string format_line(const CriterionResult& r);

}  // namespace rootspace
