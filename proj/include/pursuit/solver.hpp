#pragma once

#include "pursuit/evaluate.hpp"
#include "pursuit/gamble.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/walk.hpp"

#include <cstdint>

namespace pursuit {

struct SolveOptions {
    double tol = 1e-12;
    std::int64_t max_iterations = 10'000'000;
};

// Fixed point of V(u) = min over w in N[u] of 1 + (1-p_w) V(w), reached by
// monotone value iteration from zero; every iterate, and hence the result,
// is a lower bound on the optimal expected capture time.
struct ValueTable {
    std::vector<double> values;
    double residual = 0;
    std::int64_t iterations = 0;
};

ValueTable solve_value(const Graph& g, const Gamble& gamble, const SolveOptions& opt = {});

// Greedy argmin policy from the solved values (ties to smallest vertex id),
// rolled out from start; memoryless, so the trajectory either parks or
// enters a cycle.
Walk extract_policy_walk(const Graph& g, const Gamble& gamble, const ValueTable& vt, int start);

// lower <= true optimal value <= upper: lower from monotone iteration,
// upper the exact rational value of the extracted policy walk. width_ok
// reports whether upper - lower <= 10 * tol; a wide sandwich signals a
// tie-breaking pathology and is never silently accepted.
struct ValueSandwich {
    double lower = 0;
    Expectation upper;
    Walk policy_walk;
    bool width_ok = false;
};

ValueSandwich value_sandwich(const Graph& g, const Gamble& gamble, int start,
                             const SolveOptions& opt = {});

struct StartAnalysis {
    int worst_start = 0;
    double worst_value = 0;
    int best_start = 0;
    double best_value = 0;
};

// Argmax / argmin of the solved values over starts, ties to smallest id.
StartAnalysis start_position_analysis(const ValueTable& vt);

}  // namespace pursuit
