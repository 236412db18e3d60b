#include "pursuit/solver.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/strategies.hpp"

#include <doctest.h>

#include <cmath>

using namespace pursuit;

TEST_CASE("uniform gamble: every start is worth n") {
    SplitMix64 rng(51);
    Graph g = random_connected_graph(6, 0.4, rng);
    ValueTable vt = solve_value(g, uniform_gamble(6));
    CHECK(vt.residual <= 1e-12);
    for (double v : vt.values) CHECK(std::abs(v - 6) <= 1e-9);

    StartAnalysis sa = start_position_analysis(vt);
    CHECK(std::abs(sa.worst_value - sa.best_value) <= 1e-9);
}

TEST_CASE("delta gamble: value is max(dist, 1)") {
    SplitMix64 rng(52);
    for (int i = 0; i < 20; ++i) {
        int n = rng.next_int(2, 12);
        Graph g = random_connected_graph(n, 0.3, rng);
        int target = rng.next_int(0, n - 1);
        ValueTable vt = solve_value(g, delta_gamble(n, target));
        auto dist = bfs_distances(g, target);
        for (int u = 0; u < n; ++u) {
            CHECK(std::abs(vt.values[u] - std::max(dist[u], 1)) <= 1e-9);
        }
    }
}

TEST_CASE("policy extraction") {
    // delta: shortest path then absorb
    Graph p5 = path_graph(5);
    ValueTable vt = solve_value(p5, delta_gamble(5, 4));
    Walk w = extract_policy_walk(p5, delta_gamble(5, 4), vt, 0);
    CHECK(w.prefix == std::vector<int>{1, 2, 3, 4});
    CHECK(std::get<AbsorbTail>(w.tail).vertex == 4);

    // vertices 3 and 4 are both worth exactly 1 (moving onto the target
    // captures on arrival), so the smallest-id tie rule picks 3
    StartAnalysis sa = start_position_analysis(vt);
    CHECK(sa.best_start == 3);
    CHECK(std::abs(sa.best_value - 1) <= 1e-9);
    CHECK(std::abs(vt.values[4] - 1) <= 1e-9);
    CHECK(sa.worst_start == 0);
    CHECK(std::abs(sa.worst_value - 4) <= 1e-9);

    // uniform: any policy walk evaluates to exactly n
    SplitMix64 rng(53);
    for (int i = 0; i < 10; ++i) {
        int n = rng.next_int(2, 10);
        Graph g = random_connected_graph(n, 0.4, rng);
        ValueTable u = solve_value(g, uniform_gamble(n));
        Walk pw = extract_policy_walk(g, uniform_gamble(n), u, rng.next_int(0, n - 1));
        validate_walk(pw, g);
        CHECK(expected_capture_time(pw, uniform_gamble(n)) == Expectation::finite(n));
    }

    // star vs uniform-on-leaves: camping at one leaf (geometric mean 4)
    // beats alternating center and leaves (7), so the policy absorbs
    Graph star = star_graph(5);
    Gamble leaves = uniform_on_subset(5, {1, 2, 3, 4});
    ValueSandwich sw = value_sandwich(star, leaves, 0);
    CHECK(sw.policy_walk.prefix == std::vector<int>{1});
    CHECK(std::get<AbsorbTail>(sw.policy_walk.tail).vertex == 1);
    CHECK(sw.upper == Expectation::finite(4));
    CHECK(std::abs(sw.lower - 4) <= 1e-9);
}

TEST_CASE("value sandwich") {
    SplitMix64 rng(54);
    for (int i = 0; i < 30; ++i) {
        int n = rng.next_int(2, 12);
        Graph g = random_connected_graph(n, 0.3, rng);
        Gamble gamble = random_gamble(n, 100, rng);
        int start = rng.next_int(0, n - 1);
        ValueSandwich s = value_sandwich(g, gamble, start);
        REQUIRE_FALSE(s.upper.is_infinite);
        CHECK(s.width_ok);
        CHECK(s.lower <= s.upper.as_double() + 1e-12);
        CHECK(s.upper.value <= n);
    }

    // delta: both sides exact
    Graph p4 = path_graph(4);
    ValueSandwich s = value_sandwich(p4, delta_gamble(4, 3), 0);
    CHECK(s.upper == Expectation::finite(3));
    CHECK(std::abs(s.lower - 3) <= 1e-9);

    Graph c7 = cycle_graph(7);
    ValueSandwich u7 = value_sandwich(c7, uniform_gamble(7), 2);
    CHECK(std::abs(u7.lower - 7) <= 1e-9);
    CHECK(std::abs(u7.upper.as_double() - 7) <= 1e-9);
}

TEST_CASE("solver never beaten by the tree heuristic") {
    SplitMix64 rng(55);
    for (int i = 0; i < 25; ++i) {
        int n = rng.next_int(2, 12);
        Graph g = random_connected_graph(n, 0.3, rng);
        Gamble gamble = random_gamble(n, 100, rng);
        ValueTable vt = solve_value(g, gamble);
        for (int start = 0; start < n; ++start) {
            Expectation tree_value =
                expected_capture_time(known_gamble_walk(g, gamble, start), gamble);
            REQUIRE_FALSE(tree_value.is_infinite);
            CHECK(vt.values[start] <= tree_value.as_double() + 1e-9);
            CHECK(tree_value.value <= n);
        }
    }
}

TEST_CASE("random gamble on trees: worst start still at most n") {
    SplitMix64 rng(56);
    Graph tree = random_tree(8, rng);
    Gamble g = random_gamble(8, 100, rng);
    ValueTable vt = solve_value(tree, g);
    StartAnalysis sa = start_position_analysis(vt);
    CHECK(sa.worst_value <= 8 + 1e-9);
}

TEST_CASE("argmin choices are stable under a tighter tolerance") {
    SplitMix64 rng(57);
    for (int i = 0; i < 15; ++i) {
        int n = rng.next_int(2, 12);
        Graph g = random_connected_graph(n, 0.3, rng);
        Gamble gamble = random_gamble(n, 100, rng);
        SolveOptions coarse, fine;
        coarse.tol = 1e-10;
        fine.tol = 1e-11;
        ValueTable a = solve_value(g, gamble, coarse);
        ValueTable b = solve_value(g, gamble, fine);
        for (int start = 0; start < n; ++start) {
            CHECK(format_walk(extract_policy_walk(g, gamble, a, start)) ==
                  format_walk(extract_policy_walk(g, gamble, b, start)));
        }
    }
}
