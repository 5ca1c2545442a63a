#pragma once
// Verification harness: named invariant suites over the exact and numeric
// layers, with seeded case generation and parallel execution.

#include "deszeta/numeval.hpp"
#include "deszeta/renorm.hpp"

#include <string>
#include <vector>

namespace deszeta::verify {

struct VerifyConfig {
    unsigned bits = 192;
    double tol = -1;  // < 0: use each suite's pinned tolerance
    unsigned long long seed = 42;
    int jobs = 1;
};

struct Case {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string actual;
    double abs_err = 0;
    std::string verdict = "pass";  // pass | fail | skip
    std::string route;
    std::string equality_level;  // raw | psi-numeric | exact (when applicable)
};

struct SuiteReport {
    std::string suite;
    std::vector<Case> cases;
    int passed = 0, failed = 0, skipped = 0;
    bool ok() const { return failed == 0; }
};

// The twelve suite names, in canonical order ("all" is accepted by run_suites
// but is not itself listed).
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

// selector: a suite name or "all". Throws DomainError for unknown selectors.
std::vector<SuiteReport> run_suites(const std::string& selector, const VerifyConfig& cfg);

}  // namespace deszeta::verify
