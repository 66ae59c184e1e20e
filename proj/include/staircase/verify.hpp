#pragma once

#include <string>
#include <vector>

namespace staircase {

enum class VerifyLevel { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

// The acceptance battery. Quick shrinks sample sizes and skips the two
// long-running criteria; Full runs everything at contract size. When
// inject_failure is set, a deliberately corrupted pairing table is fed to
// the identity suite, which must then report a failure.
std::vector<CriterionResult> run_acceptance(VerifyLevel level, bool inject_failure = false);

} // namespace staircase
