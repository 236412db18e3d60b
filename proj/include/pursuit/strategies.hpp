#pragma once

#include "pursuit/evaluate.hpp"
#include "pursuit/gamble.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/walk.hpp"

namespace pursuit {

// Per-vertex branch statistics with respect to a fixed root: size[v] is the
// number of vertices in the branch at v, mass[v] the gamble probability it
// carries. size[root] = n, mass[root] = 1.
struct BranchTable {
    std::vector<int> size;
    std::vector<Rational> mass;
};

BranchTable branch_table(const RootedTree& rt, const Gamble& g);

// Descends from the root, at each vertex either stopping for good (when
// the vertex's own probability beats its branch average) or stepping into
// the child branch of highest average probability; ties to smallest id.
// Guarantees expected capture time at most n against g.
Walk tree_pursuit_walk(const RootedTree& rt, const Gamble& g);

// Spanning tree of g rooted at start, then the tree pursuit walk.
Walk known_gamble_walk(const Graph& g, const Gamble& gamble, int start);

// Fair coin between the two directions of running around the cycle forever.
RandomizedStrategy cycle_circling_strategy(const Graph& g, int start);

// Survival factor of one full circuit: the product of (1-p) over all
// vertices.
Rational circuit_survival(const Gamble& g);

// Fair coin between the forward and reversed repeated patrol tours.
RandomizedStrategy dfs_patrol_strategy(const RootedTree& rt);

// Survival factor of one closed patrol tour, both root endpoint
// occupancies included; at most prod (1-p_v)^2 since the tour occupies
// every vertex at least twice.
Rational patrol_round_survival(const RootedTree& rt, const Gamble& g);

// The star sweep: cop starts at the center and visits the leaves in a
// uniformly random order, returning to the center between leaves. With
// dwell 1 she is at a leaf exactly on even moves; with dwell 2 she stays
// one extra turn at each leaf (period-3 blocks). The uniform mixture over
// leaf orders has (n-1)! components, so exact values against the two named
// opponents are computed by rank symmetry instead of enumeration.
class StarSweep {
public:
    StarSweep(const Graph& g, int dwell);

    int center() const { return center_; }
    const std::vector<int>& leaves() const { return leaves_; }
    int dwell() const { return dwell_; }

    Walk walk_for_order(const std::vector<int>& leaf_order) const;

    // All (n-1)! leaf orders as an explicit mixture; throws above 7 leaves.
    RandomizedStrategy enumerate_strategy() const;

    // The sitter's leaf has uniform capture rank r among the leaves; the
    // first coincidence happens on the cop's arrival at that leaf.
    Rational exact_vs_random_sitter() const;

    // Every leaf visit is an independent 1/(n-1) trial, so the expectation
    // is the same for every leaf order; closed-form geometric sums.
    Rational exact_vs_uniform_leaves() const;

private:
    int center_;
    std::vector<int> leaves_;
    int dwell_;
};

}  // namespace pursuit
