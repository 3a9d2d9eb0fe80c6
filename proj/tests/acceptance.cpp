// One PASS/FAIL line per acceptance criterion, each backed by a suite run at
// its default limits.

#include <iostream>
#include <string>

#include "bellstir/verify.hpp"

using namespace bellstir;

int main() {
  const struct {
    int id;
    const char* suite;
  } criteria[] = {
      {1, "bell-n-exhaustive"}, {2, "bell-trivial"}, {3, "gt-parity"},     {4, "star-parity"},
      {5, "s3-endpoints"},      {6, "sk-trees"},     {7, "top-stirling-iso"}, {8, "figures"},
      {9, "bijections"},        {10, "connectivity"}, {11, "rook-cube"},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto reports = run_suite(c.suite);
    const Status s = aggregate(reports);
    int bad = 0;
    double seconds = 0;
    const VerificationReport* first = nullptr;
    for (const auto& r : reports) {
      seconds += r.seconds;
      if (r.status != Status::kPass) {
        ++bad;
        if (!first) first = &r;
      }
    }
    std::cout << (s == Status::kPass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << c.suite << "] "
              << reports.size() - bad << "/" << reports.size() << " instances, " << static_cast<int>(seconds + 0.5)
              << "s";
    if (first) std::cout << "; first " << to_string(first->status) << ": " << first->instance << ": " << first->evidence;
    std::cout << std::endl;
    failed += s != Status::kPass;
  }
  return failed == 0 ? 0 : 1;
}
