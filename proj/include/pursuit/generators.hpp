#pragma once

#include "pursuit/gamble.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/rng.hpp"
#include "pursuit/walk.hpp"

namespace pursuit {

// Uniform random labeled tree (Pruefer decode).
Graph random_tree(int n, SplitMix64& rng);

// Random tree plus each non-tree edge independently with the given
// probability.
Graph random_connected_graph(int n, double extra_edge_prob, SplitMix64& rng);

// Integer weights drawn uniformly from [0, max_weight], normalized; at
// least one weight is forced positive.
Gamble random_gamble(int n, int max_weight, SplitMix64& rng);
Gamble random_gamble(int n, SplitMix64& rng);  // max_weight 100

// Random stay-or-step walk with a random prefix and either an absorbing
// tail or a closed out-and-back loop.
Walk random_walk(const Graph& g, int max_prefix, SplitMix64& rng);

// One representative per isomorphism class of trees on n vertices, built
// by leaf extension with canonical-form deduplication. Counts for
// n = 1..9: 1 1 1 2 3 6 11 23 47.
std::vector<Graph> enumerate_trees(int n);

}  // namespace pursuit
