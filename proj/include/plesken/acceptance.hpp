#pragma once

#include "plesken/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plesken {

struct AcceptanceOptions {
  std::size_t max_group_order = 27;
  std::uint64_t seed = 7;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::string detail;  // first failure, or a short summary on success
};

struct AcceptanceReport {
  AcceptanceOptions options;
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
};

/// Runs the verification suite (criteria 1-11). Deterministic for a
/// fixed (max_group_order, seed); criterion 11 re-runs 1-10 and compares the
/// serialized reports byte for byte.
AcceptanceReport run_acceptance(const AcceptanceOptions& options);

/// Criteria 1-10 only.
AcceptanceReport run_core_criteria(const AcceptanceOptions& options);

Json report_to_json(const AcceptanceReport& report);
/// One "PASS"/"FAIL" line per criterion.
std::string report_to_text(const AcceptanceReport& report);

}  // namespace plesken
