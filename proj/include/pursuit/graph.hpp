#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pursuit {

// Connected simple undirected graph on vertices 0..n-1. Validated on
// construction; all game operations rely on these invariants.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Ascending vertex ids.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Normalized u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    bool is_tree() const { return edge_count() == n_ - 1; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Edge-list document: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' are comments. Each defect (malformed line, vertex
// out of range, self-loop, duplicate edge, disconnected) gets its own
// diagnostic.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

// Breadth-first tree from vertex 0, neighbors scanned in ascending id
// order; deterministic for a given input.
Graph spanning_tree(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, int source);

// Canonical small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // center 0, leaves 1..n-1

struct RootedTree {
    Graph tree;
    int root;
    std::vector<int> parent;                 // parent[root] == root
    std::vector<std::vector<int>> children;  // ascending ids
    std::vector<int> subtree_size;           // branch size at each vertex
};

RootedTree root_tree(const Graph& t, int root);

// Closed tour of occupancies starting and ending at the root: each tree
// edge traversed exactly twice, children in ascending id order (descending
// when reversed), one extra dwell occupancy on every leaf entry. Length is
// at most 3n-2 moves. The reversed tour is the exact reverse sequence.
std::vector<int> dfs_patrol_order(const RootedTree& rt, bool reversed = false);

}  // namespace pursuit
