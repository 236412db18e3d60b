#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

// One checked bound: the claim string identifies what is being verified,
// claimed/computed are exact rationals ("a/b") or decimals. Rows from the
// conjecture probe are informational (asserted = false).
struct BoundRow {
    std::string case_id;
    std::string claim;
    std::string claimed;
    std::string computed;
    bool asserted = true;
    bool pass = true;
};

struct ExperimentResult {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<BoundRow> rows;

    bool all_pass() const;
};

// name in {value-n, tree-bound, star, cycle, dfs-patrol, conjecture-probe}.
// Unspecified parameters take experiment-specific defaults (including the
// seed, so runs are reproducible by default).
ExperimentResult run_experiment(const std::string& name,
                                const std::map<std::string, std::string>& params);

// format in {json, csv, text}; stable field ordering, exact rationals.
std::string emit(const ExperimentResult& result, const std::string& format);

}  // namespace pursuit
