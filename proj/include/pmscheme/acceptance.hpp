#pragma once

// The end-to-end verification suite behind `pmscheme selftest` and the
// acceptance ctest target. Each criterion is exact; a criterion that cannot
// be met is reported as FAIL with the offending items named in `detail`.

#include <functional>
#include <string>
#include <vector>

namespace pmscheme {

class ResultCache;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    /// Criteria to run (1..13); empty runs all of them.
    std::vector<int> only;
    /// Used for the small full tables; may be null.
    ResultCache* cache = nullptr;
    /// Called after each criterion finishes.
    std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int kCriterionCount = 13;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS [3] title (1.2 s): detail"
std::string format_result(const CriterionResult& r);

} // namespace pmscheme
