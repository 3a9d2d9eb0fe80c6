#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bellstir/hamilton.hpp"

namespace bellstir {

enum class Status { kPass, kFail, kInconclusive };

std::string to_string(Status status);

struct VerificationReport {
  std::string suite;
  std::string instance;  // graph, k and kind
  Status status = Status::kPass;
  // What was certified on a pass; the first violated pair, missing vertex
  // or non-edge on a fail; the exhausted budget when inconclusive.
  std::string evidence;
  double seconds = 0.0;
};

struct SuiteLimits {
  int max_n = -1;        // the suite's own default when negative
  unsigned workers = 0;  // hardware concurrency when 0
  std::uint64_t budget = default_search_budget();
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  int default_max_n;
};

const std::vector<SuiteInfo>& suites();

// Runs every instance of the suite on a bounded pool of threads. Reports come
// back in instance order whatever the scheduling. Unknown names throw
// PreconditionError.
std::vector<VerificationReport> run_suite(std::string_view name, const SuiteLimits& limits = {});

// kFail if any report failed, else kInconclusive if any was, else kPass.
Status aggregate(const std::vector<VerificationReport>& reports);

// 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status status);

std::string reports_text(const std::vector<VerificationReport>& reports, bool with_times = true);
std::string reports_json(const std::vector<VerificationReport>& reports);

}  // namespace bellstir
