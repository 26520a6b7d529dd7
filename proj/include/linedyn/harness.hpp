#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

// Named verification cases. Each case runs a list of checks and reports
// every check with its witness data, so a failing case says exactly which
// statement failed and on what input.
namespace linedyn {

struct RunOptions {
  std::uint64_t seed = 1;
  std::uint64_t sample_prime = 100003;  // sampled checks
  std::uint64_t scan_prime = 101;       // full-surface scans
  bool timing = false;                  // include wall time in the JSON report
};

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct VerificationReport {
  std::string id;
  std::string status;  // "pass", "fail" or "skip"
  std::string reference;
  std::string message;  // set for skips and unexpected errors
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  double seconds = 0;

  const CheckResult* check(const std::string& name) const;
  bool check_passed(const std::string& name) const;
  nlohmann::json to_json(bool timing) const;
};

struct CaseInfo {
  std::string id;
  std::string reference;  // the statement the case verifies
};
const std::vector<CaseInfo>& case_catalog();

// UnknownCase for ids outside the catalog.
VerificationReport run_case(const std::string& id, const RunOptions& opts);

// Runs the cases on `jobs` worker threads; results keep the order of `ids`.
std::vector<VerificationReport> run_cases(const std::vector<std::string>& ids, const RunOptions& opts, int jobs);

// 0 all pass, 1 any failure, 2 no failure but at least one skip.
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace linedyn
