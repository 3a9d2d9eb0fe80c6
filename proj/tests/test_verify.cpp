#include <gtest/gtest.h>

#include "bellstir/errors.hpp"
#include "bellstir/verify.hpp"

using namespace bellstir;

TEST(Suites, UnknownNameThrows) { EXPECT_THROW(run_suite("no-such-suite"), PreconditionError); }

TEST(Suites, ListIsComplete) {
  EXPECT_EQ(suites().size(), 11u);
  for (const SuiteInfo& s : suites()) EXPECT_GT(s.default_max_n, 0) << s.name;
}

TEST(Suites, SmallRunsPass) {
  SuiteLimits lim;
  lim.max_n = 4;
  for (const char* name : {"bell-n-exhaustive", "bell-trivial", "gt-parity", "star-parity", "s3-endpoints",
                           "figures", "bijections", "connectivity", "rook-cube"}) {
    const auto reports = run_suite(name, lim);
    EXPECT_FALSE(reports.empty()) << name;
    EXPECT_EQ(aggregate(reports), Status::kPass) << name << "\n" << reports_text(reports);
  }
}

TEST(Suites, SameOutputWhateverTheWorkerCount) {
  SuiteLimits one;
  one.max_n = 6;
  one.workers = 1;
  SuiteLimits three = one;
  three.workers = 3;
  const auto a = run_suite("sk-trees", one);
  const auto b = run_suite("sk-trees", three);
  EXPECT_EQ(reports_text(a, false), reports_text(b, false));
  EXPECT_EQ(reports_text(a, false), reports_text(run_suite("sk-trees", one), false));
}

TEST(Suites, AliasForTheLineGraphSuite) {
  SuiteLimits lim;
  lim.max_n = 3;
  const auto a = run_suite("lemma41-iso", lim);
  const auto b = run_suite("top-stirling-iso", lim);
  EXPECT_EQ(reports_text(a, false), reports_text(b, false));
}

TEST(Suites, FailuresCarryWitnesses) {
  SuiteLimits lim;
  lim.max_n = 3;
  // P_3: S_2 is one vertex, the complement an edge and an isolated vertex
  const auto reports = run_suite("top-stirling-iso", lim);
  bool found = false;
  for (const auto& r : reports) {
    if (r.status == Status::kFail) {
      found = true;
      EXPECT_NE(r.evidence.find("isolated"), std::string::npos);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Suites, AggregateAndExitCodes) {
  std::vector<VerificationReport> r(3);
  EXPECT_EQ(aggregate(r), Status::kPass);
  r[1].status = Status::kInconclusive;
  EXPECT_EQ(aggregate(r), Status::kInconclusive);
  r[2].status = Status::kFail;
  EXPECT_EQ(aggregate(r), Status::kFail);
  EXPECT_EQ(exit_code(Status::kPass), 0);
  EXPECT_EQ(exit_code(Status::kFail), 1);
  EXPECT_EQ(exit_code(Status::kInconclusive), 2);
}

TEST(Suites, JsonReport) {
  SuiteLimits lim;
  lim.max_n = 2;
  const std::string j = reports_json(run_suite("bell-trivial", lim));
  EXPECT_NE(j.find("\"status\": \"pass\""), std::string::npos);
}
