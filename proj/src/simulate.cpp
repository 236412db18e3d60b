#include "pursuit/simulate.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace pursuit {

WalkSampler sampler_from(const Walk& w) {
    return [w](SplitMix64&) { return w; };
}

WalkSampler sampler_from(const RandomizedStrategy& s) {
    std::vector<double> cumulative;
    double acc = 0;
    for (const auto& [weight, walk] : s.components) {
        acc += to_double(weight);
        cumulative.push_back(acc);
    }
    return [s, cumulative](SplitMix64& rng) {
        double u = rng.next_unit();
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        size_t i = std::min(static_cast<size_t>(it - cumulative.begin()),
                            s.components.size() - 1);
        return s.components[i].second;
    };
}

WalkSampler sampler_from(const StarSweep& sweep) {
    return [sweep](SplitMix64& rng) {
        std::vector<int> order = sweep.leaves();
        for (size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[rng.next_below(i)]);
        }
        return sweep.walk_for_order(order);
    };
}

namespace {

// Inverse-CDF table for drawing the gambler's vertex.
struct VertexSampler {
    std::vector<double> cumulative;
    std::vector<int> vertex;  // only positive-mass vertices

    explicit VertexSampler(const Gamble& g) {
        double acc = 0;
        for (int v = 0; v < g.size(); ++v) {
            if (g.prob(v) == 0) continue;
            acc += to_double(g.prob(v));
            cumulative.push_back(acc);
            vertex.push_back(v);
        }
        cumulative.back() = 1.0;  // guard against rounding shortfall
    }

    int draw(SplitMix64& rng) const {
        double u = rng.next_unit();
        auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        size_t i = std::min(static_cast<size_t>(it - cumulative.begin()), vertex.size() - 1);
        return vertex[i];
    }
};

struct Accumulator {
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::uint64_t diverged = 0;

    void merge(const Accumulator& other) {
        sum += other.sum;
        sum_sq += other.sum_sq;
        diverged += other.diverged;
        for (auto [t, c] : other.histogram) histogram[t] += c;
    }
};

}  // namespace

SimReport simulate(const WalkSampler& strategy, const Opponent& opponent, const SimOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    std::uint64_t step_cap = opt.step_cap;
    if (step_cap == 0) step_cap = std::max<std::uint64_t>(1000000000ULL / opt.trials, 1);

    // Pre-build vertex samplers: one per meta component, plus the component
    // chooser, all outside the trial loop.
    std::vector<VertexSampler> samplers;
    std::vector<double> component_cumulative;
    if (const auto* g = std::get_if<Gamble>(&opponent)) {
        samplers.emplace_back(*g);
    } else {
        const auto& meta = std::get<MetaGamble>(opponent);
        double acc = 0;
        for (const auto& [w, g] : meta.components()) {
            samplers.emplace_back(g);
            acc += to_double(w);
            component_cumulative.push_back(acc);
        }
    }

    auto run_trial = [&](std::uint64_t index) -> std::pair<std::uint64_t, bool> {
        SplitMix64 rng = trial_rng(opt.master_seed, index);
        Walk walk = strategy(rng);
        const VertexSampler* vs = &samplers[0];
        if (!component_cumulative.empty()) {
            double u = rng.next_unit();
            auto it = std::lower_bound(component_cumulative.begin(), component_cumulative.end(), u);
            size_t i = std::min(static_cast<size_t>(it - component_cumulative.begin()),
                                samplers.size() - 1);
            vs = &samplers[i];
        }
        // walk occupancies streamed without modulo bookkeeping where possible
        for (std::uint64_t t = 1; t <= step_cap; ++t) {
            if (vs->draw(rng) == walk.occupancy(static_cast<std::int64_t>(t))) return {t, false};
        }
        return {step_cap, true};
    };

    int threads = std::max(1, opt.threads);
    std::vector<Accumulator> partial(threads);
    auto worker = [&](int id) {
        std::uint64_t lo = opt.trials * id / threads;
        std::uint64_t hi = opt.trials * (id + 1) / threads;
        Accumulator& acc = partial[id];
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto [t, capped] = run_trial(i);
            acc.sum += t;
            acc.sum_sq += static_cast<unsigned __int128>(t) * t;
            ++acc.histogram[t];
            if (capped) ++acc.diverged;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }

    Accumulator total;
    for (const auto& acc : partial) total.merge(acc);

    SimReport report;
    report.trials = opt.trials;
    report.master_seed = opt.master_seed;
    report.capture_time_histogram = std::move(total.histogram);
    report.diverged = total.diverged;
    double n = static_cast<double>(opt.trials);
    double sum = static_cast<double>(total.sum);
    double sum_sq = static_cast<double>(total.sum_sq);
    report.mean = sum / n;
    report.sample_variance =
        opt.trials > 1 ? std::max(0.0, (sum_sq - sum * sum / n) / (n - 1)) : 0.0;
    report.ci95_halfwidth = 1.96 * std::sqrt(report.sample_variance / n);
    return report;
}

std::string report_to_json(const SimReport& r) {
    nlohmann::ordered_json j;
    j["trials"] = r.trials;
    j["mean"] = r.mean;
    j["sample_variance"] = r.sample_variance;
    j["ci95_halfwidth"] = r.ci95_halfwidth;
    j["master_seed"] = r.master_seed;
    j["diverged"] = r.diverged;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (auto [t, c] : r.capture_time_histogram) hist[std::to_string(t)] = c;
    j["capture_time_histogram"] = hist;
    return j.dump(2);
}

std::vector<McCheckRow> compare_exact_vs_mc(const std::vector<ExactCase>& cases,
                                            const SimOptions& opt) {
    std::vector<McCheckRow> rows;
    for (const auto& c : cases) {
        SimReport r = simulate(c.strategy, c.opponent, opt);
        McCheckRow row;
        row.name = c.name;
        row.mean = r.mean;
        row.exact = to_double(c.exact);
        row.sigma = r.ci95_halfwidth / 1.96;
        row.ok = r.diverged == 0 && std::abs(row.mean - row.exact) <= 4 * row.sigma;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pursuit
