#pragma once

// Cross-method and oracle equivalence suites run by `pkenum verify`.

#include <string>
#include <vector>

namespace pkenum {

struct VerifyOptions {
    int n_max = 12;              // oracle comparisons run up to here
    int matching_n_max = 30;     // walk vs determinant
    int matching_k_max = 9;
    int cross_method_n_max = 40;  // inclusion-exclusion vs series
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    int checks = 0;
    std::string detail;          // summary, or the first divergent cell
};

std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

}  // namespace pkenum
