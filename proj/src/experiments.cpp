#include "pursuit/experiments.hpp"

#include "pursuit/evaluate.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pursuit {

namespace {

using Params = std::map<std::string, std::string>;

long long param_int(const Params& params, const std::string& key, long long fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        size_t pos = 0;
        long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("experiment: parameter '" + key + "' is not an integer: '" +
                                    it->second + "'");
    }
}

std::string decimal(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

BoundRow exact_eq_row(std::string case_id, std::string claim, const Rational& expected,
                      const Expectation& got) {
    return BoundRow{std::move(case_id), std::move(claim), fraction_string(expected), got.str(),
                    true, !got.is_infinite && got.value == expected};
}

BoundRow exact_le_row(std::string case_id, std::string claim, const Rational& bound,
                      const Expectation& got) {
    return BoundRow{std::move(case_id), std::move(claim), fraction_string(bound), got.str(), true,
                    !got.is_infinite && got.value <= bound};
}

std::vector<int> degree_one_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) out.push_back(v);
    }
    return out;
}

// ---- value-n -------------------------------------------------------------

ExperimentResult experiment_value_n(const Params& params) {
    int n = static_cast<int>(param_int(params, "n", 12));
    int graphs = static_cast<int>(param_int(params, "graphs", 20));
    std::uint64_t seed = param_int(params, "seed", 1101);
    if (n < 2) throw std::invalid_argument("experiment value-n: n must be >= 2");

    ExperimentResult result{"value-n",
                            {{"n", std::to_string(n)},
                             {"graphs", std::to_string(graphs)},
                             {"seed", std::to_string(seed)}},
                            {}};
    SplitMix64 rng(seed);
    Gamble uniform = uniform_gamble(n);
    for (int i = 0; i < graphs; ++i) {
        Graph g = random_connected_graph(n, 0.25, rng);
        std::string tag = "graph-" + std::to_string(i);

        Walk arbitrary = random_walk(g, 2 * n, rng);
        result.rows.push_back(exact_eq_row(tag + "/walk", "exact E(any walk vs uniform) == n",
                                           Rational(n), expected_capture_time(arbitrary, uniform)));

        Walk pursuit_walk = known_gamble_walk(g, uniform, rng.next_int(0, n - 1));
        result.rows.push_back(exact_eq_row(tag + "/strategy",
                                           "exact E(known-gamble walk vs uniform) == n", Rational(n),
                                           expected_capture_time(pursuit_walk, uniform)));

        ValueTable vt = solve_value(g, uniform);
        double deviation = 0;
        for (double v : vt.values) deviation = std::max(deviation, std::abs(v - n));
        result.rows.push_back(BoundRow{tag + "/solver",
                                       "solver value within 1e-9 of n at every start", "1e-9",
                                       decimal(deviation), true, deviation <= 1e-9});
    }
    return result;
}

// ---- tree-bound ----------------------------------------------------------

ExperimentResult experiment_tree_bound(const Params& params) {
    int trees = static_cast<int>(param_int(params, "trees", 20));
    int max_n = static_cast<int>(param_int(params, "max-n", 9));
    int gambles = static_cast<int>(param_int(params, "gambles", 10));
    std::uint64_t seed = param_int(params, "seed", 2202);

    ExperimentResult result{"tree-bound",
                            {{"trees", std::to_string(trees)},
                             {"max-n", std::to_string(max_n)},
                             {"gambles", std::to_string(gambles)},
                             {"seed", std::to_string(seed)}},
                            {}};
    SplitMix64 rng(seed);
    for (int i = 0; i < trees; ++i) {
        int n = rng.next_int(2, max_n);
        Graph tree = random_tree(n, rng);
        RootedTree rt = root_tree(tree, rng.next_int(0, n - 1));
        for (int j = 0; j < gambles; ++j) {
            Gamble g = random_gamble(n, 100, rng);
            Walk w = tree_pursuit_walk(rt, g);
            std::string tag = "tree-" + std::to_string(i) + "/gamble-" + std::to_string(j);
            result.rows.push_back(exact_le_row(tag + "/total", "exact E(tree walk) <= n",
                                               Rational(n), expected_capture_time(w, g)));

            // suffix bound at every vertex on the descent path
            BranchTable stats = branch_table(rt, g);
            bool suffix_ok = true;
            std::vector<int> path{w.start};
            for (int v : w.prefix) path.push_back(v);
            for (size_t k = 0; k < path.size(); ++k) {
                Walk suffix{path[k], std::vector<int>(path.begin() + k + 1, path.end()),
                            std::get<AbsorbTail>(w.tail)};
                Expectation e = expected_capture_time(suffix, g);
                int v = path[k];
                if (e.is_infinite || stats.mass[v] == 0 ||
                    e.value * stats.mass[v] > Rational(stats.size[v])) {
                    suffix_ok = false;
                }
            }
            result.rows.push_back(BoundRow{tag + "/suffix",
                                           "suffix E from each path vertex <= size/mass",
                                           "size/mass", suffix_ok ? "all hold" : "violated", true,
                                           suffix_ok});
        }
    }
    return result;
}

// ---- star ----------------------------------------------------------------

ExperimentResult experiment_star(const Params& params) {
    int n = static_cast<int>(param_int(params, "n", 5));
    std::uint64_t seed = param_int(params, "seed", 3303);
    if (n < 3) throw std::invalid_argument("experiment star: n must be >= 3");

    ExperimentResult result{
        "star", {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}}, {}};
    Graph g = star_graph(n);
    StarSweep dwell1(g, 1);
    StarSweep dwell2(g, 2);

    result.rows.push_back(exact_eq_row("dwell-1/sitter", "sweep vs random sitter == n",
                                       Rational(n),
                                       Expectation::finite(dwell1.exact_vs_random_sitter())));
    result.rows.push_back(exact_eq_row("dwell-1/uniform-leaves",
                                       "sweep vs uniform-on-leaves == 2n-2", Rational(2 * n - 2),
                                       Expectation::finite(dwell1.exact_vs_uniform_leaves())));

    Rational window_lo = Rational(3 * n, 2) - 2, window_hi = Rational(3 * n, 2) + 2;
    for (auto [tag, value] :
         {std::pair<const char*, Rational>{"dwell-2/sitter", dwell2.exact_vs_random_sitter()},
          std::pair<const char*, Rational>{"dwell-2/uniform-leaves",
                                           dwell2.exact_vs_uniform_leaves()}}) {
        result.rows.push_back(BoundRow{
            tag, "double-visit sweep within [3n/2 - 2 .. 3n/2 + 2]",
            "[" + fraction_string(window_lo) + " .. " + fraction_string(window_hi) + "]",
            fraction_string(value), true, window_lo <= value && value <= window_hi});
    }

    // simulation cross-check of the 2n-2 constant
    SimOptions opt;
    opt.trials = 20000;
    opt.master_seed = seed;
    SimReport r = simulate(sampler_from(dwell1),
                           Opponent{uniform_on_subset(n, dwell1.leaves())}, opt);
    double sigma = r.ci95_halfwidth / 1.96;
    bool ok = std::abs(r.mean - (2 * n - 2)) <= 4 * sigma && r.diverged == 0;
    result.rows.push_back(BoundRow{"dwell-1/mc-check", "simulated mean within 4 sigma of 2n-2",
                                   std::to_string(2 * n - 2), decimal(r.mean), true, ok});
    return result;
}

// ---- cycle ---------------------------------------------------------------

ExperimentResult experiment_cycle(const Params& params) {
    int n = static_cast<int>(param_int(params, "n", 30));
    int gambles = static_cast<int>(param_int(params, "gambles", 100));
    std::uint64_t seed = param_int(params, "seed", 4404);
    if (n < 3) throw std::invalid_argument("experiment cycle: n must be >= 3");

    ExperimentResult result{"cycle",
                            {{"n", std::to_string(n)},
                             {"gambles", std::to_string(gambles)},
                             {"seed", std::to_string(seed)}},
                            {}};
    Graph g = cycle_graph(n);
    RandomizedStrategy circling = cycle_circling_strategy(g, 0);

    Rational survival_bound = 1;
    for (int i = 0; i < n; ++i) survival_bound *= Rational(n - 1, n);
    double e = std::exp(1.0);
    double time_bound = (e / (e - 1) - 0.5) * n + 1;

    result.rows.push_back(exact_eq_row("uniform", "circling vs uniform == n", Rational(n),
                                       expected_capture_randomized(circling, uniform_gamble(n))));

    SplitMix64 rng(seed);
    for (int j = 0; j < gambles; ++j) {
        Gamble gamble = random_gamble(n, 100, rng);
        std::string tag = "gamble-" + std::to_string(j);
        Rational survival = circuit_survival(gamble);
        result.rows.push_back(BoundRow{tag + "/survival",
                                       "per-circuit survival <= (1-1/n)^n",
                                       fraction_string(survival_bound), fraction_string(survival),
                                       true, survival <= survival_bound});
        Expectation value = expected_capture_randomized(circling, gamble);
        result.rows.push_back(BoundRow{tag + "/time",
                                       "exact E <= (e/(e-1) - 1/2) n + 1", decimal(time_bound),
                                       value.str(), true,
                                       !value.is_infinite && value.as_double() <= time_bound});
    }
    return result;
}

// ---- dfs-patrol ----------------------------------------------------------

ExperimentResult experiment_dfs_patrol(const Params& params) {
    int trees = static_cast<int>(param_int(params, "trees", 50));
    int max_n = static_cast<int>(param_int(params, "max-n", 40));
    int gambles = static_cast<int>(param_int(params, "gambles", 3));
    std::uint64_t seed = param_int(params, "seed", 5505);

    ExperimentResult result{"dfs-patrol",
                            {{"trees", std::to_string(trees)},
                             {"max-n", std::to_string(max_n)},
                             {"gambles", std::to_string(gambles)},
                             {"seed", std::to_string(seed)}},
                            {}};
    SplitMix64 rng(seed);
    for (int i = 0; i < trees; ++i) {
        int n = rng.next_int(2, max_n);
        Graph tree = random_tree(n, rng);
        RootedTree rt = root_tree(tree, 0);
        std::string tag = "tree-" + std::to_string(i);

        auto order = dfs_patrol_order(rt);
        auto moves = static_cast<long long>(order.size()) - 1;
        result.rows.push_back(BoundRow{tag + "/round", "patrol round length <= 3n-2",
                                       std::to_string(3LL * n - 2), std::to_string(moves), true,
                                       moves <= 3LL * n - 2});

        RandomizedStrategy patrol = dfs_patrol_strategy(rt);
        Rational pair_bound = 1;
        for (int v = 0; v < n; ++v) pair_bound *= Rational(n - 1, n) * Rational(n - 1, n);

        std::vector<std::pair<std::string, Gamble>> opponents;
        for (int j = 0; j < gambles; ++j) {
            opponents.emplace_back("random-" + std::to_string(j), random_gamble(n, 100, rng));
        }
        opponents.emplace_back("uniform", uniform_gamble(n));
        auto leaves = degree_one_vertices(tree);
        opponents.emplace_back("uniform-leaves", uniform_on_subset(n, leaves));

        for (const auto& [name, gamble] : opponents) {
            Rational survival = patrol_round_survival(rt, gamble);
            Rational mass_bound = 1;
            for (const auto& p : gamble.probs()) mass_bound *= (1 - p) * (1 - p);
            bool chain = survival <= mass_bound && mass_bound <= pair_bound;
            result.rows.push_back(BoundRow{tag + "/" + name + "/survival",
                                           "round survival <= prod (1-p)^2 <= (1-1/n)^2n",
                                           fraction_string(pair_bound), fraction_string(survival),
                                           true, chain});
            Expectation value = expected_capture_randomized(patrol, gamble);
            result.rows.push_back(BoundRow{tag + "/" + name + "/time", "exact E < 2n",
                                           fraction_string(Rational(2 * n)), value.str(), true,
                                           !value.is_infinite && value.value < 2 * n});
        }
    }
    return result;
}

// ---- conjecture-probe ----------------------------------------------------

// Exact sweep expectation against a meta-gamble whose components are leaf
// or center deltas, uniform-on-leaves, or uniform: linear in the mixture,
// with each component value known in closed form.
Rational sweep_vs_meta(const StarSweep& sweep, const MetaGamble& meta, int n) {
    Rational total = 0;
    Gamble leaves_uniform = uniform_on_subset(n, sweep.leaves());
    for (const auto& [w, g] : meta.components()) {
        Rational value;
        if (g == uniform_gamble(n)) {
            value = n;
        } else if (g == leaves_uniform) {
            value = sweep.exact_vs_uniform_leaves();
        } else if (g.prob(sweep.center()) == 1) {
            value = 1;
        } else {
            bool is_leaf_delta = false;
            for (int leaf : sweep.leaves()) {
                if (g.prob(leaf) == 1) is_leaf_delta = true;
            }
            if (!is_leaf_delta) {
                throw std::invalid_argument("sweep_vs_meta: unsupported component");
            }
            value = sweep.exact_vs_random_sitter();
        }
        total += w * value;
    }
    return total;
}

ExperimentResult experiment_conjecture_probe(const Params& params) {
    std::uint64_t seed = param_int(params, "seed", 6606);
    std::vector<int> sizes;
    {
        std::string list = params.count("sizes") ? params.at("sizes") : "9,17,25";
        std::istringstream in(list);
        std::string tok;
        while (std::getline(in, tok, ',')) sizes.push_back(std::stoi(tok));
    }

    ExperimentResult result{"conjecture-probe", {{"seed", std::to_string(seed)}}, {}};
    {
        std::ostringstream s;
        for (size_t i = 0; i < sizes.size(); ++i) s << (i ? "," : "") << sizes[i];
        result.params.emplace_back("sizes", s.str());
    }

    SplitMix64 rng(seed);
    for (int n : sizes) {
        std::vector<std::pair<std::string, Graph>> family;
        family.emplace_back("star", star_graph(n));
        family.emplace_back("cycle", cycle_graph(n));
        family.emplace_back("path", path_graph(n));
        family.emplace_back("random-tree", random_tree(n, rng));

        for (const auto& [name, g] : family) {
            auto leaves = degree_one_vertices(g);
            std::vector<int> sitter_support = leaves.empty()
                                                  ? [&] {
                                                        std::vector<int> all(n);
                                                        for (int v = 0; v < n; ++v) all[v] = v;
                                                        return all;
                                                    }()
                                                  : leaves;
            MetaGamble sitter = random_sitter_meta(n, sitter_support);
            MetaGamble spread{{{Rational(1),
                                leaves.empty() ? uniform_gamble(n)
                                               : uniform_on_subset(n, leaves)}}};

            std::vector<std::pair<std::string, MetaGamble>> metas;
            metas.emplace_back("sitter", sitter);
            metas.emplace_back("spread", spread);
            for (int quarters : {1, 2, 3}) {
                metas.emplace_back("mix-" + std::to_string(quarters) + "/4",
                                   mix_meta(Rational(quarters, 4), sitter, spread));
            }
            if (name == "cycle") {
                int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
                metas.emplace_back("interval", interval_meta(n, k));
            }

            // cop responses evaluated exactly per meta
            RootedTree rt = root_tree(spanning_tree(g), 0);
            RandomizedStrategy patrol = dfs_patrol_strategy(rt);

            Rational worst = 0;
            std::string worst_meta;
            for (const auto& [meta_name, meta] : metas) {
                Expectation best = Expectation::infinite();
                auto consider = [&](const Expectation& e) {
                    if (e.is_infinite) return;
                    if (best.is_infinite || e.value < best.value) best = e;
                };
                consider(expected_capture_meta(patrol, meta));
                for (int v : {0, n - 1}) {
                    consider(expected_capture_meta(
                        RandomizedStrategy{{{Rational(1), stay_walk(v)}}}, meta));
                }
                if (name == "cycle") {
                    consider(expected_capture_meta(cycle_circling_strategy(g, 0), meta));
                }
                if (name == "star") {
                    for (int dwell : {1, 2}) {
                        consider(Expectation::finite(
                            sweep_vs_meta(StarSweep(g, dwell), meta, n)));
                    }
                }
                if (!best.is_infinite && best.value > worst) {
                    worst = best.value;
                    worst_meta = meta_name;
                }
            }
            result.rows.push_back(BoundRow{
                name + "-" + std::to_string(n), "evidence: best response to worst tested meta (" +
                                                    worst_meta + ") as multiple of n",
                "3/2 conjectured", decimal(to_double(worst) / n), false, true});
        }
    }
    return result;
}

}  // namespace

bool ExperimentResult::all_pass() const {
    for (const auto& row : rows) {
        if (row.asserted && !row.pass) return false;
    }
    return true;
}

ExperimentResult run_experiment(const std::string& name, const Params& params) {
    if (name == "value-n") return experiment_value_n(params);
    if (name == "tree-bound") return experiment_tree_bound(params);
    if (name == "star") return experiment_star(params);
    if (name == "cycle") return experiment_cycle(params);
    if (name == "dfs-patrol") return experiment_dfs_patrol(params);
    if (name == "conjecture-probe") return experiment_conjecture_probe(params);
    throw std::invalid_argument("unknown experiment: " + name);
}

std::string emit(const ExperimentResult& result, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["experiment"] = result.id;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [k, v] : result.params) p[k] = v;
        j["params"] = p;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : result.rows) {
            nlohmann::ordered_json r;
            r["case"] = row.case_id;
            r["claim"] = row.claim;
            r["claimed"] = row.claimed;
            r["computed"] = row.computed;
            r["asserted"] = row.asserted;
            r["pass"] = row.pass;
            rows.push_back(std::move(r));
        }
        j["rows"] = rows;
        j["all_pass"] = result.all_pass();
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "case,claim,claimed,computed,asserted,pass\n";
        for (const auto& row : result.rows) {
            out << row.case_id << ',' << row.claim << ',' << row.claimed << ',' << row.computed
                << ',' << (row.asserted ? "true" : "false") << ','
                << (row.pass ? "true" : "false") << '\n';
        }
        return out.str();
    }
    if (format == "text") {
        std::ostringstream out;
        out << "experiment " << result.id << " (";
        for (size_t i = 0; i < result.params.size(); ++i) {
            out << (i ? ", " : "") << result.params[i].first << "=" << result.params[i].second;
        }
        out << ")\n";
        for (const auto& row : result.rows) {
            out << (row.pass ? "  [ok]   " : "  [FAIL] ") << row.case_id << ": " << row.claim
                << "  claimed " << row.claimed << ", computed " << row.computed
                << (row.asserted ? "" : "  (informational)") << '\n';
        }
        out << (result.all_pass() ? "all asserted bounds hold\n" : "ASSERTED BOUND VIOLATED\n");
        return out.str();
    }
    throw std::invalid_argument("unknown format: " + format);
}

}  // namespace pursuit
