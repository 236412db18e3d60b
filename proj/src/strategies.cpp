#include "pursuit/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace pursuit {

BranchTable branch_table(const RootedTree& rt, const Gamble& g) {
    int n = rt.tree.vertex_count();
    if (g.size() != n) throw std::invalid_argument("branch_table: size mismatch");

    BranchTable bt{rt.subtree_size, std::vector<Rational>(n, 0)};
    // children appear after parents in a BFS order from the root, so one
    // reverse sweep accumulates branch masses bottom-up
    std::vector<int> order;
    order.reserve(n);
    order.push_back(rt.root);
    for (size_t i = 0; i < order.size(); ++i) {
        for (int c : rt.children[order[i]]) order.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bt.mass[v] = g.prob(v);
        for (int c : rt.children[v]) bt.mass[v] += bt.mass[c];
    }
    return bt;
}

Walk tree_pursuit_walk(const RootedTree& rt, const Gamble& g) {
    BranchTable bt = branch_table(rt, g);

    Walk w;
    w.start = rt.root;
    int v = rt.root;
    while (true) {
        // stop rule: p(v) >= mass(v)/size(v), exact; fires automatically at
        // a leaf where mass(v)/size(v) = p(v)
        if (g.prob(v) * bt.size[v] >= bt.mass[v]) break;
        int best = -1;
        for (int c : rt.children[v]) {
            if (best < 0 || bt.mass[c] * bt.size[best] > bt.mass[best] * bt.size[c]) best = c;
        }
        if (best < 0) break;  // leaf; unreachable, the stop rule fired above
        if (bt.mass[best] == 0) {
            throw std::logic_error("tree_pursuit_walk: descended into a zero-mass branch");
        }
        w.prefix.push_back(best);
        v = best;
    }
    w.tail = AbsorbTail{v};
    return w;
}

Walk known_gamble_walk(const Graph& g, const Gamble& gamble, int start) {
    return tree_pursuit_walk(root_tree(spanning_tree(g), start), gamble);
}

namespace {

// Both traversal orders of a cycle graph starting at `start`; [0] begins
// with the smaller-id neighbor.
std::vector<std::vector<int>> cycle_orders(const Graph& g, int start) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("cycle strategy: graph is not a cycle");
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) throw std::invalid_argument("cycle strategy: graph is not a cycle");
    }
    std::vector<std::vector<int>> orders;
    for (int first : g.neighbors(start)) {
        std::vector<int> order;
        int prev = start, cur = first;
        while (cur != start) {
            order.push_back(cur);
            const auto& nb = g.neighbors(cur);
            int next = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        order.push_back(start);
        orders.push_back(std::move(order));
    }
    return orders;
}

}  // namespace

RandomizedStrategy cycle_circling_strategy(const Graph& g, int start) {
    auto orders = cycle_orders(g, start);
    RandomizedStrategy s;
    for (auto& order : orders) {
        s.components.emplace_back(Rational(1, 2), Walk{start, {}, LoopTail{std::move(order)}});
    }
    return s;
}

Rational circuit_survival(const Gamble& g) {
    Rational s = 1;
    for (const auto& p : g.probs()) s *= 1 - p;
    return s;
}

RandomizedStrategy dfs_patrol_strategy(const RootedTree& rt) {
    RandomizedStrategy s;
    for (bool reversed : {false, true}) {
        auto order = dfs_patrol_order(rt, reversed);
        Walk w;
        w.start = rt.root;
        if (order.size() == 1) {
            w.tail = AbsorbTail{rt.root};
        } else {
            w.tail = LoopTail{std::vector<int>(order.begin() + 1, order.end())};
        }
        s.components.emplace_back(Rational(1, 2), std::move(w));
    }
    return s;
}

Rational patrol_round_survival(const RootedTree& rt, const Gamble& g) {
    Rational s = 1;
    for (int v : dfs_patrol_order(rt)) s *= 1 - g.prob(v);
    return s;
}

StarSweep::StarSweep(const Graph& g, int dwell) : center_(-1), dwell_(dwell) {
    int n = g.vertex_count();
    if (dwell != 1 && dwell != 2) throw std::invalid_argument("star sweep: dwell must be 1 or 2");
    if (n < 2 || g.edge_count() != n - 1) {
        throw std::invalid_argument("star sweep: graph is not a star");
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            center_ = v;
            break;
        }
    }
    if (center_ < 0) throw std::invalid_argument("star sweep: graph is not a star");
    for (int v = 0; v < n; ++v) {
        if (v != center_) leaves_.push_back(v);
    }
}

Walk StarSweep::walk_for_order(const std::vector<int>& leaf_order) const {
    if (leaf_order.size() != leaves_.size()) {
        throw std::invalid_argument("star sweep: wrong leaf order length");
    }
    std::vector<int> block;
    block.reserve((1 + dwell_) * leaf_order.size());
    for (int leaf : leaf_order) {
        block.push_back(center_);
        for (int d = 0; d < dwell_; ++d) block.push_back(leaf);
    }
    return Walk{center_, {}, LoopTail{std::move(block)}};
}

RandomizedStrategy StarSweep::enumerate_strategy() const {
    if (leaves_.size() > 7) {
        throw std::invalid_argument("star sweep: too many leaves to enumerate");
    }
    std::vector<int> order = leaves_;
    std::int64_t count = 1;
    for (std::int64_t i = 2; i <= static_cast<std::int64_t>(order.size()); ++i) count *= i;

    RandomizedStrategy s;
    Rational weight(1, count);
    do {
        s.components.emplace_back(weight, walk_for_order(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return s;
}

Rational StarSweep::exact_vs_random_sitter() const {
    auto L = static_cast<std::int64_t>(leaves_.size());
    // first arrival at the leaf of rank r is move 2r (dwell 1) or 3r-1 (dwell 2)
    Rational sum = 0;
    for (std::int64_t r = 1; r <= L; ++r) {
        sum += (dwell_ == 1) ? 2 * r : 3 * r - 1;
    }
    return sum / L;
}

Rational StarSweep::exact_vs_uniform_leaves() const {
    auto L = static_cast<std::int64_t>(leaves_.size());
    Rational q = 1 - Rational(1, L);
    // survival sums across one period of the block; trials occur exactly at
    // leaf occupancies
    int period = (1 + dwell_) * static_cast<int>(L);
    Rational survival = 1, block_sum = 0;
    for (int j = 1; j <= period; ++j) {
        bool at_leaf = (j % (1 + dwell_)) != 1;
        if (at_leaf) survival *= q;
        block_sum += survival;
    }
    return 1 + block_sum / (1 - survival);
}

}  // namespace pursuit
