#pragma once

#include <string>
#include <vector>

namespace weylpt {

// One runtime self-check: a measured value, the bound or scaling it must
// satisfy (human-readable), and whether it did.
struct CheckResult {
    std::string name;
    double value = 0.0;
    std::string expected;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    int failures() const;
};

// Runs the full property suite: randomized algebra laws (fixed seed, 100 cases
// per law), exact hierarchy residuals, Hermitian-series structure, the matrix
// oracle for <n|h2|n>, spectrum reality and eps^4 error scaling, metric and
// observable pseudo-Hermiticity scaling, and density conservation. Independent
// groups fan out over `threads` workers (0 = WEYLPT_THREADS env or hardware
// count); result order is deterministic either way.
VerifyReport verify_report(int threads = 0);

}  // namespace weylpt
