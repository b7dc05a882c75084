#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace starhankel {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned workers = 0;
  std::uint64_t seed = 20261016;
  /// When set, criterion 9 also compares the golden sweep byte-for-byte with this file.
  std::optional<std::filesystem::path> golden_sweep;
};

/// The sweep whose CSV is frozen as a golden file: phi method, alpha 0..0.9, 9 steps, seed 7.
std::string golden_sweep_csv(unsigned workers);

CriterionResult check_sharp_bound_reproduction(const VerifyOptions& options);
CriterionResult check_sharpness_attainment(const VerifyOptions& options);
CriterionResult check_full_parameter_search(const VerifyOptions& options);
CriterionResult check_genuine_function_search(const VerifyOptions& options);
CriterionResult check_prior_result_anchors(const VerifyOptions& options);
CriterionResult check_algebra_reconciliation(const VerifyOptions& options);
CriterionResult check_proof_step_properties(const VerifyOptions& options);
CriterionResult check_caratheodory_admissibility(const VerifyOptions& options);
CriterionResult check_determinism(const VerifyOptions& options);

/// All nine criteria in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

/// "[PASS] 3 full-parameter search (1.2 s): detail".
std::string summary_line(const CriterionResult& result);

}  // namespace starhankel
