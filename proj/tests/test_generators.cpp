#include "pursuit/generators.hpp"
#include "pursuit/walk.hpp"

#include <doctest.h>

using namespace pursuit;

TEST_CASE("random trees and graphs are valid") {
    SplitMix64 rng(61);
    for (int i = 0; i < 200; ++i) {
        int n = rng.next_int(1, 40);
        Graph t = random_tree(n, rng);
        CHECK(t.is_tree());
        Graph g = random_connected_graph(n, 0.3, rng);
        CHECK(g.edge_count() >= n - 1);
    }
}

TEST_CASE("random gambles are exact distributions with zero entries allowed") {
    SplitMix64 rng(62);
    bool saw_zero = false;
    for (int i = 0; i < 100; ++i) {
        int n = rng.next_int(1, 20);
        Gamble g = random_gamble(n, 100, rng);
        Rational sum = 0;
        for (const auto& p : g.probs()) {
            sum += p;
            if (p == 0) saw_zero = true;
        }
        CHECK(sum == 1);
    }
    CHECK(saw_zero);
}

TEST_CASE("random walks satisfy the adjacency invariant") {
    SplitMix64 rng(63);
    int loops = 0, absorbs = 0;
    for (int i = 0; i < 200; ++i) {
        int n = rng.next_int(1, 20);
        Graph g = random_connected_graph(n, 0.3, rng);
        Walk w = random_walk(g, 12, rng);
        validate_walk(w, g);
        (w.absorbing() ? absorbs : loops)++;
    }
    CHECK(loops > 20);
    CHECK(absorbs > 20);
}

TEST_CASE("unlabeled tree enumeration matches the known counts") {
    const int expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n]);
        for (const auto& t : trees) {
            CHECK(t.vertex_count() == n);
            CHECK(t.is_tree());
        }
    }
}

TEST_CASE("generators are deterministic in the seed") {
    SplitMix64 a(99), b(99);
    Graph ga = random_connected_graph(15, 0.25, a);
    Graph gb = random_connected_graph(15, 0.25, b);
    CHECK(ga.edges() == gb.edges());
    CHECK(random_gamble(15, 50, a).probs() == random_gamble(15, 50, b).probs());
    CHECK(format_walk(random_walk(ga, 10, a)) == format_walk(random_walk(gb, 10, b)));
}
