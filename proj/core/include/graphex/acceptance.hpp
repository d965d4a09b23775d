#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphex {

// Default master seed of the acceptance suite; any other seed is expected to
// pass as well, this one pins the shipped reports.
inline constexpr uint64_t kDefaultSuiteSeed = 414213562;

struct SuiteOptions {
  uint64_t seed = kDefaultSuiteSeed;
  double reps_scale = 1.0;  // < 1 shrinks every replicate budget (CIs widen)
  unsigned threads = 1;
  std::vector<int> only;  // empty = all criteria
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double value = 0.0;      // the measured statistic
  double threshold = 0.0;  // the pinned acceptance bound
  std::string comparison;  // e.g. "<=", "in [0.4965, 0.5]"
  std::string detail;
  double seconds = 0.0;
};

// Runs the statistical acceptance criteria (all thresholds pinned in code)
// and returns one result per criterion, in id order.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt);

std::string suite_report_json(const std::vector<CriterionResult>& results, const SuiteOptions& opt);

// One human-readable pass/fail line per criterion.
std::string format_criterion_line(const CriterionResult& r);

}  // namespace graphex
