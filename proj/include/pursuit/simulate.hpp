#pragma once

#include "pursuit/gamble.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/strategies.hpp"
#include "pursuit/walk.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace pursuit {

// Draws the cop's walk for one trial. Strategies with super-polynomially
// many walks (random leaf orders) are sampled here rather than enumerated.
using WalkSampler = std::function<Walk(SplitMix64&)>;

WalkSampler sampler_from(const Walk& w);
WalkSampler sampler_from(const RandomizedStrategy& s);
WalkSampler sampler_from(const StarSweep& sweep);

using Opponent = std::variant<Gamble, MetaGamble>;

struct SimOptions {
    std::uint64_t trials = 100000;
    std::uint64_t master_seed = 0;
    int threads = 1;
    std::uint64_t step_cap = 0;  // 0: 10^9 / trials
};

// Pure function of (inputs, master_seed): per-trial randomness is derived
// from the trial index alone, so thread count and schedule cannot change
// any field.
struct SimReport {
    std::uint64_t trials = 0;
    double mean = 0;
    double sample_variance = 0;
    double ci95_halfwidth = 0;
    std::uint64_t master_seed = 0;
    std::map<std::uint64_t, std::uint64_t> capture_time_histogram;
    std::uint64_t diverged = 0;  // trials that hit the step cap

    bool operator==(const SimReport&) const = default;
};

SimReport simulate(const WalkSampler& strategy, const Opponent& opponent, const SimOptions& opt);

std::string report_to_json(const SimReport& r);

struct ExactCase {
    std::string name;
    WalkSampler strategy;
    Opponent opponent;
    Rational exact;
};

struct McCheckRow {
    std::string name;
    double mean = 0;
    double exact = 0;
    double sigma = 0;  // standard error of the mean
    bool ok = false;   // |mean - exact| <= 4 sigma (and no diverged trials)
};

// Runs each case and flags disagreement beyond 4 standard errors.
std::vector<McCheckRow> compare_exact_vs_mc(const std::vector<ExactCase>& cases,
                                            const SimOptions& opt);

}  // namespace pursuit
