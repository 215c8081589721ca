#pragma once

#include <string>
#include <vector>

namespace mixedop {

/// Outcome of one invariant suite. `detail` keeps the first failure only;
/// the count covers everything.
struct SuiteResult {
    int number = 0;
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string detail;
    bool passed() const { return failures == 0; }
};

/// Runs suite 1..10 (seeded, deterministic). Throws std::out_of_range for
/// any other number.
SuiteResult run_invariant_suite(int number);

/// All ten suites in order.
std::vector<SuiteResult> run_invariant_suites();

} // namespace mixedop
