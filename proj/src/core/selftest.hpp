#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gia {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

inline constexpr int kCriterionCount = 15;

/// Runs the acceptance checks (all, or just `only`) against the frozen published values.
std::vector<CriterionResult> run_selftest(const std::string& cache_dir = {}, std::optional<int> only = std::nullopt);
CriterionResult run_criterion(int id, const std::string& cache_dir = {});

}  // namespace gia
