#include "pursuit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pursuit {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("graph: vertex id out of range in edge " +
                                        std::to_string(u) + " " + std::to_string(v));
        }
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        }
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    auto dist = bfs_distances(*this, 0);
    for (int v = 0; v < n_; ++v) {
        if (dist[v] < 0) {
            throw std::invalid_argument("graph: disconnected (vertex " + std::to_string(v) +
                                        " unreachable)");
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        if (first[0] == '#') continue;
        if (n < 0) {
            std::istringstream hs(line);
            std::string extra;
            if (!(hs >> n >> m) || n < 1 || m < 0 || (hs >> extra)) {
                throw std::invalid_argument("graph: malformed header line " +
                                            std::to_string(line_no) + ": '" + line + "'");
            }
            continue;
        }
        std::istringstream es(line);
        int u, v;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) {
            throw std::invalid_argument("graph: malformed edge line " + std::to_string(line_no) +
                                        ": '" + line + "'");
        }
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("graph: missing header line \"n m\"");
    if (static_cast<int>(edges.size()) != m) {
        throw std::invalid_argument("graph: header declares " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    }
    return Graph(n, std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

Graph spanning_tree(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> visited(n, false);
    std::vector<std::pair<int, int>> tree_edges;
    std::queue<int> q;
    visited[0] = true;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (!visited[w]) {
                visited[w] = true;
                tree_edges.emplace_back(u, w);
                q.push(w);
            }
        }
    }
    return Graph(n, std::move(tree_edges));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
}

RootedTree root_tree(const Graph& t, int root) {
    int n = t.vertex_count();
    if (!t.is_tree()) throw std::invalid_argument("root_tree: input is not a tree");
    if (root < 0 || root >= n) throw std::invalid_argument("root_tree: root out of range");

    RootedTree rt{t, root, std::vector<int>(n, -1), std::vector<std::vector<int>>(n),
                  std::vector<int>(n, 0)};
    rt.parent[root] = root;
    std::vector<int> order;
    order.reserve(n);
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int w : t.neighbors(u)) {
            if (rt.parent[w] < 0) {
                rt.parent[w] = u;
                rt.children[u].push_back(w);
                order.push_back(w);
            }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        rt.subtree_size[u] = 1;
        for (int c : rt.children[u]) rt.subtree_size[u] += rt.subtree_size[c];
    }
    return rt;
}

namespace {

void patrol_visit(const RootedTree& rt, int v, std::vector<int>& out) {
    if (rt.children[v].empty()) {
        out.push_back(v);  // leaf dwell
        return;
    }
    for (int c : rt.children[v]) {
        out.push_back(c);
        patrol_visit(rt, c, out);
        out.push_back(v);
    }
}

}  // namespace

std::vector<int> dfs_patrol_order(const RootedTree& rt, bool reversed) {
    std::vector<int> order;
    order.push_back(rt.root);
    if (rt.tree.vertex_count() > 1) patrol_visit(rt, rt.root, order);
    if (reversed) std::reverse(order.begin(), order.end());
    return order;
}

}  // namespace pursuit
