#include "pursuit/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pursuit {

Graph random_tree(int n, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});

    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = rng.next_int(0, n - 1);

    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // smallest-leaf decode; a heap would be overkill at desk scale
    std::vector<bool> used(n, false);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, x);
                used[leaf] = true;
                --degree[x];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
    }
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double extra_edge_prob, SplitMix64& rng) {
    Graph tree = random_tree(n, rng);
    auto edges = tree.edges();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!tree.adjacent(u, v) && rng.next_unit() < extra_edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

Gamble random_gamble(int n, SplitMix64& rng) { return random_gamble(n, 100, rng); }

Gamble random_gamble(int n, int max_weight, SplitMix64& rng) {
    if (max_weight < 1) throw std::invalid_argument("random_gamble: max_weight must be >= 1");
    std::vector<long long> weights(n);
    long long total = 0;
    for (auto& w : weights) {
        w = rng.next_int(0, max_weight);
        total += w;
    }
    if (total == 0) {
        weights[rng.next_int(0, n - 1)] = 1;
        total = 1;
    }
    std::vector<Rational> p(n);
    for (int v = 0; v < n; ++v) p[v] = Rational(weights[v], total);
    return Gamble(std::move(p));
}

namespace {

int random_move(const Graph& g, int v, SplitMix64& rng) {
    // stay or step, uniformly over the closed neighborhood
    int pick = rng.next_int(0, g.degree(v));
    return pick == 0 ? v : g.neighbors(v)[pick - 1];
}

}  // namespace

Walk random_walk(const Graph& g, int max_prefix, SplitMix64& rng) {
    Walk w;
    w.start = rng.next_int(0, g.vertex_count() - 1);
    int len = rng.next_int(0, max_prefix);
    int cur = w.start;
    for (int i = 0; i < len; ++i) {
        cur = random_move(g, cur, rng);
        w.prefix.push_back(cur);
    }
    if (rng.next_below(2) == 0) {
        w.tail = AbsorbTail{random_move(g, cur, rng)};
    } else {
        // out-and-back block: closed under the wrap by construction
        std::vector<int> out;
        int steps = rng.next_int(1, std::max(1, max_prefix / 2));
        int v = cur;
        for (int i = 0; i < steps; ++i) {
            v = random_move(g, v, rng);
            out.push_back(v);
        }
        std::vector<int> block = out;
        for (int i = static_cast<int>(out.size()) - 2; i >= 0; --i) block.push_back(out[i]);
        w.tail = LoopTail{std::move(block)};
    }
    return w;
}

namespace {

// AHU canonical encoding of a rooted tree.
std::string encode_rooted(const RootedTree& rt, int v) {
    std::vector<std::string> parts;
    for (int c : rt.children[v]) parts.push_back(encode_rooted(rt, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& s : parts) out += s;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Graph& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> degree(n), order;
    for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next_layer;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : t.neighbors(v)) {
                if (!removed[w] && --degree[w] == 1) next_layer.push_back(w);
            }
        }
        layer = std::move(next_layer);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) centers.push_back(v);
    }
    return centers;
}

std::string canonical_form(const Graph& t) {
    std::string best;
    for (int c : tree_centers(t)) {
        std::string enc = encode_rooted(root_tree(t, c), c);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be positive");
    std::vector<Graph> current{Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : current) {
            for (int attach = 0; attach < t.vertex_count(); ++attach) {
                auto edges = t.edges();
                edges.emplace_back(attach, size - 1);
                Graph grown(size, std::move(edges));
                std::string key = canonical_form(grown);
                next.emplace(std::move(key), std::move(grown));
            }
        }
        current.clear();
        for (auto& [key, tree] : next) current.push_back(std::move(tree));
    }
    return current;
}

}  // namespace pursuit
