#include "pursuit/evaluate.hpp"
#include "pursuit/experiments.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace pursuit;

std::vector<int> degree_one_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) out.push_back(v);
    }
    return out;
}

// A gamble argument is a file path or one of the built-ins @uniform,
// @uniform-leaves, @delta:<v>.
Gamble resolve_gamble(const std::string& spec, const Graph& g) {
    int n = g.vertex_count();
    if (spec == "@uniform") return uniform_gamble(n);
    if (spec == "@uniform-leaves") {
        auto leaves = degree_one_vertices(g);
        if (leaves.empty()) throw std::invalid_argument("@uniform-leaves: graph has no leaves");
        return uniform_on_subset(n, leaves);
    }
    if (spec.rfind("@delta:", 0) == 0) return delta_gamble(n, std::stoi(spec.substr(7)));
    if (!spec.empty() && spec[0] == '@') throw std::invalid_argument("unknown gamble: " + spec);
    return load_gamble(spec, n);
}

// Meta-gamble built-ins: random-sitter, interval:<k>.
MetaGamble resolve_meta(const std::string& spec, const Graph& g) {
    int n = g.vertex_count();
    if (spec == "random-sitter") {
        auto support = degree_one_vertices(g);
        if (support.empty()) {
            support.resize(n);
            for (int v = 0; v < n; ++v) support[v] = v;
        }
        return random_sitter_meta(n, support);
    }
    if (spec.rfind("interval:", 0) == 0) return interval_meta(n, std::stoi(spec.substr(9)));
    throw std::invalid_argument("unknown meta-gamble: " + spec);
}

WalkSampler resolve_strategy(const std::string& name, const Graph& g,
                             const std::optional<Gamble>& gamble, int start) {
    auto need_gamble = [&]() -> const Gamble& {
        if (!gamble) throw std::invalid_argument("strategy '" + name + "' needs --gamble");
        return *gamble;
    };
    if (name == "tree") {
        if (!g.is_tree()) throw std::invalid_argument("strategy 'tree' needs a tree graph");
        return sampler_from(tree_pursuit_walk(root_tree(g, start), need_gamble()));
    }
    if (name == "spanning-tree") {
        return sampler_from(known_gamble_walk(g, need_gamble(), start));
    }
    if (name == "cycle-circle") return sampler_from(cycle_circling_strategy(g, start));
    if (name == "star-sweep:1") return sampler_from(StarSweep(g, 1));
    if (name == "star-sweep:2") return sampler_from(StarSweep(g, 2));
    if (name == "dfs-patrol") {
        return sampler_from(dfs_patrol_strategy(root_tree(spanning_tree(g), start)));
    }
    if (name.rfind("stay:", 0) == 0) {
        int v = std::stoi(name.substr(5));
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument("stay: vertex out of range");
        }
        return sampler_from(stay_walk(v));
    }
    throw std::invalid_argument("unknown strategy: " + name);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cop vs. gambler pursuit engine"};
    app.require_subcommand(1);

    std::string graph_path, gamble_spec, meta_spec, walk_literal, out_path;
    std::string strategy_name, format = "text", experiment_name;
    int start = 0, threads = 1;
    double tol = 1e-12;
    std::uint64_t trials = 100000, seed = 0;
    std::vector<std::string> experiment_params;

    auto* eval = app.add_subcommand("eval-walk", "exact expected capture time of a walk");
    eval->add_option("--graph", graph_path)->required();
    eval->add_option("--gamble", gamble_spec)->required();
    eval->add_option("--walk", walk_literal, "\"start | p1 ... pk | absorb a\" or \"... | loop c1 ... cL\"")
        ->required();
    eval->add_option("--format", format, "text | json");
    eval->add_option("--out", out_path);

    auto* tree = app.add_subcommand("tree-strategy", "pursuit walk against a known gamble");
    tree->add_option("--graph", graph_path)->required();
    tree->add_option("--gamble", gamble_spec)->required();
    tree->add_option("--start", start);
    tree->add_option("--format", format, "text | json");
    tree->add_option("--out", out_path);

    auto* solve = app.add_subcommand("solve", "optimal values by fixed-point iteration");
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--gamble", gamble_spec)->required();
    solve->add_option("--start", start);
    solve->add_option("--tol", tol);
    solve->add_option("--format", format, "text | json");
    solve->add_option("--out", out_path);

    auto* sim = app.add_subcommand("simulate", "Monte Carlo capture-time estimate");
    sim->add_option("--strategy", strategy_name)->required();
    sim->add_option("--graph", graph_path)->required();
    sim->add_option("--gamble", gamble_spec);
    sim->add_option("--meta", meta_spec);
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed);
    sim->add_option("--threads", threads);
    sim->add_option("--start", start);
    sim->add_option("--out", out_path);

    auto* exp = app.add_subcommand("experiment", "named bound-checking experiments");
    exp->add_option("name", experiment_name,
                    "value-n | tree-bound | star | cycle | dfs-patrol | conjecture-probe")
        ->required();
    exp->add_option("--param,-p", experiment_params, "key=value (repeatable)");
    exp->add_option("--seed", seed);
    exp->add_option("--format", format, "json | csv | text");
    exp->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            Graph g = load_graph(graph_path);
            Gamble gamble = resolve_gamble(gamble_spec, g);
            Walk w = parse_walk(walk_literal);
            validate_walk(w, g);
            Expectation e = expected_capture_time(w, gamble);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["walk"] = format_walk(w);
                j["expected_capture_time"] = e.str();
                j["infinite"] = e.is_infinite;
                if (!e.is_infinite) j["approx"] = e.as_double();
                write_output(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream out;
                out << "walk: " << format_walk(w) << "\n";
                out << "expected capture time: " << e.str();
                if (!e.is_infinite) out << " ~ " << e.as_double();
                out << "\n";
                write_output(out_path, out.str());
            }
        } else if (*tree) {
            Graph g = load_graph(graph_path);
            Gamble gamble = resolve_gamble(gamble_spec, g);
            RootedTree rt = root_tree(spanning_tree(g), start);
            Walk w = tree_pursuit_walk(rt, gamble);
            BranchTable bt = branch_table(rt, gamble);
            Expectation e = expected_capture_time(w, gamble);
            std::vector<int> path{w.start};
            for (int v : w.prefix) path.push_back(v);
            struct DescentRow {
                int vertex;
                int size;
                std::string mass;
                std::string suffix;
            };
            std::vector<DescentRow> descent;
            for (size_t k = 0; k < path.size(); ++k) {
                Walk suffix{path[k], std::vector<int>(path.begin() + k + 1, path.end()),
                            std::get<AbsorbTail>(w.tail)};
                Expectation se = expected_capture_time(suffix, gamble);
                int v = path[k];
                descent.push_back({v, bt.size[v], fraction_string(bt.mass[v]), se.str()});
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                j["walk"] = format_walk(w);
                j["exact"] = e.str();
                j["approx"] = e.as_double();
                j["guarantee"] = g.vertex_count();
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const auto& row : descent) {
                    rows.push_back({{"vertex", row.vertex},
                                    {"branch_size", row.size},
                                    {"branch_mass", row.mass},
                                    {"suffix_expectation", row.suffix}});
                }
                j["descent"] = rows;
                write_output(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream out;
                out << "walk: " << format_walk(w) << "\n";
                out << "exact E: " << e.str() << " ~ " << e.as_double()
                    << "  (guarantee: <= " << g.vertex_count() << ")\n";
                out << "descent (vertex  branch-size  branch-mass  suffix-E):\n";
                for (const auto& row : descent) {
                    out << "  " << row.vertex << "  " << row.size << "  " << row.mass << "  "
                        << row.suffix << "\n";
                }
                write_output(out_path, out.str());
            }
        } else if (*solve) {
            Graph g = load_graph(graph_path);
            Gamble gamble = resolve_gamble(gamble_spec, g);
            SolveOptions opt;
            opt.tol = tol;
            ValueTable vt = solve_value(g, gamble, opt);
            ValueSandwich sandwich = value_sandwich(g, gamble, start, opt);
            StartAnalysis sa = start_position_analysis(vt);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["iterations"] = vt.iterations;
                j["residual"] = vt.residual;
                j["values"] = vt.values;
                j["best_start"] = sa.best_start;
                j["best_value"] = sa.best_value;
                j["worst_start"] = sa.worst_start;
                j["worst_value"] = sa.worst_value;
                j["start"] = start;
                j["sandwich_lower"] = sandwich.lower;
                j["sandwich_upper"] = sandwich.upper.str();
                j["sandwich_width_ok"] = sandwich.width_ok;
                j["policy_walk"] = format_walk(sandwich.policy_walk);
                write_output(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream out;
                out.precision(15);
                out << "iterations: " << vt.iterations << "  residual: " << vt.residual << "\n";
                out << "values:\n";
                for (int v = 0; v < g.vertex_count(); ++v) {
                    out << "  " << v << "  " << vt.values[v] << "\n";
                }
                out << "best start: " << sa.best_start << " (" << sa.best_value
                    << ")  worst start: " << sa.worst_start << " (" << sa.worst_value << ")\n";
                out << "sandwich at " << start << ": lower " << sandwich.lower << "  upper "
                    << sandwich.upper.str() << (sandwich.width_ok ? "" : "  [WIDTH EXCEEDED]")
                    << "\n";
                out << "policy walk: " << format_walk(sandwich.policy_walk) << "\n";
                write_output(out_path, out.str());
            }
            if (!sandwich.width_ok) return 1;
        } else if (*sim) {
            Graph g = load_graph(graph_path);
            if (gamble_spec.empty() == meta_spec.empty()) {
                throw std::invalid_argument("simulate needs exactly one of --gamble / --meta");
            }
            std::optional<Gamble> gamble;
            std::optional<Opponent> opponent;
            if (!gamble_spec.empty()) {
                gamble = resolve_gamble(gamble_spec, g);
                opponent = Opponent{*gamble};
            } else {
                opponent = Opponent{resolve_meta(meta_spec, g)};
            }
            WalkSampler sampler = resolve_strategy(strategy_name, g, gamble, start);
            SimOptions opt;
            opt.trials = trials;
            opt.master_seed = seed;
            opt.threads = threads;
            SimReport report = simulate(sampler, *opponent, opt);
            write_output(out_path, report_to_json(report) + "\n");
            if (report.diverged > 0) {
                std::cerr << report.diverged << " trial(s) hit the step cap (divergence)\n";
                return 1;
            }
        } else if (*exp) {
            std::map<std::string, std::string> params;
            for (const auto& kv : experiment_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
                }
                params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            if (seed != 0) params.emplace("seed", std::to_string(seed));
            ExperimentResult result = run_experiment(experiment_name, params);
            write_output(out_path, emit(result, format));
            if (!result.all_pass()) return 1;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
