#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pft/record.hpp"

namespace pft {

/// Convention phase between the analytic and numeric chain propagators. The
/// analytic form is built in the Schroedinger picture, so no offset remains.
inline constexpr Complex kRecordedConventionPhase{1.0, 0.0};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::pair<std::string, Value>> measurements;
  double seconds = 0.0;
  std::optional<double> time_limit;
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
};

/// Runs every acceptance criterion. Criterion 12 re-runs 1-11 and compares
/// the serialized records byte for byte.
VerificationReport run_verification();

/// Criteria 1-11 only.
VerificationReport run_verification_core();

/// Deterministic record: pass flags and measurements, no timings.
ResultRecord verification_record(const VerificationReport& report);

}  // namespace pft
