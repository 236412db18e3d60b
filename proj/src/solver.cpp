#include "pursuit/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace pursuit {

namespace {

// Candidates for the next vertex: the closed neighborhood in ascending id
// order, so "ties to smallest id" is the first strict minimum.
std::vector<int> closed_neighborhood(const Graph& g, int u) {
    std::vector<int> cand;
    cand.reserve(g.degree(u) + 1);
    bool placed = false;
    for (int w : g.neighbors(u)) {
        if (!placed && u < w) {
            cand.push_back(u);
            placed = true;
        }
        cand.push_back(w);
    }
    if (!placed) cand.push_back(u);
    return cand;
}

double bellman_at(const Graph& g, const std::vector<double>& p, const std::vector<double>& v,
                  int u) {
    double best = 1 + (1 - p[u]) * v[u];
    for (int w : g.neighbors(u)) {
        double cand = 1 + (1 - p[w]) * v[w];
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace

ValueTable solve_value(const Graph& g, const Gamble& gamble, const SolveOptions& opt) {
    int n = g.vertex_count();
    if (gamble.size() != n) throw std::invalid_argument("solve_value: size mismatch");

    std::vector<double> p(n);
    for (int v = 0; v < n; ++v) p[v] = to_double(gamble.prob(v));

    std::vector<double> value(n, 0.0), next(n, 0.0);
    for (std::int64_t it = 1; it <= opt.max_iterations; ++it) {
        double step = 0;
        for (int u = 0; u < n; ++u) {
            next[u] = bellman_at(g, p, value, u);
            step = std::max(step, std::abs(next[u] - value[u]));
        }
        if ((it & 63) == 0) {
            for (int u = 0; u < n; ++u) {
                if (next[u] < value[u] - 1e-9) {
                    throw std::logic_error("solve_value: iterate decreased");
                }
            }
        }
        value.swap(next);
        if (step < opt.tol) {
            double residual = 0;
            for (int u = 0; u < n; ++u) {
                residual = std::max(residual, std::abs(bellman_at(g, p, value, u) - value[u]));
            }
            ValueTable vt{std::move(value), residual, it};
            for (double x : vt.values) {
                if (!(x >= 0) || !std::isfinite(x)) {
                    throw std::logic_error("solve_value: non-finite value");
                }
            }
            return vt;
        }
    }
    throw std::runtime_error("solve_value: iteration cap exceeded (effectively infinite value)");
}

Walk extract_policy_walk(const Graph& g, const Gamble& gamble, const ValueTable& vt, int start) {
    int n = g.vertex_count();
    if (gamble.size() != n || static_cast<int>(vt.values.size()) != n) {
        throw std::invalid_argument("extract_policy_walk: size mismatch");
    }
    std::vector<double> p(n);
    for (int v = 0; v < n; ++v) p[v] = to_double(gamble.prob(v));

    std::vector<int> policy(n);
    for (int u = 0; u < n; ++u) {
        int best = -1;
        double best_value = 0;
        for (int w : closed_neighborhood(g, u)) {
            double cand = 1 + (1 - p[w]) * vt.values[w];
            if (best < 0 || cand < best_value) {
                best = w;
                best_value = cand;
            }
        }
        policy[u] = best;
    }

    Walk walk;
    walk.start = start;
    std::vector<int> first_seen(n, -1);
    std::vector<int> trajectory{start};
    first_seen[start] = 0;
    int cur = start;
    while (true) {
        int nxt = policy[cur];
        if (nxt == cur) {
            walk.prefix.assign(trajectory.begin() + 1, trajectory.end());
            walk.tail = AbsorbTail{cur};
            return walk;
        }
        if (first_seen[nxt] >= 0) {
            int entry = first_seen[nxt];
            walk.prefix.assign(trajectory.begin() + 1, trajectory.begin() + entry + 1);
            std::vector<int> block(trajectory.begin() + entry + 1, trajectory.end());
            block.push_back(nxt);
            walk.tail = LoopTail{std::move(block)};
            return walk;
        }
        first_seen[nxt] = static_cast<int>(trajectory.size());
        trajectory.push_back(nxt);
        cur = nxt;
    }
}

ValueSandwich value_sandwich(const Graph& g, const Gamble& gamble, int start,
                             const SolveOptions& opt) {
    ValueTable vt = solve_value(g, gamble, opt);
    ValueSandwich s;
    s.lower = vt.values[start];
    s.policy_walk = extract_policy_walk(g, gamble, vt, start);
    s.upper = expected_capture_time(s.policy_walk, gamble);
    s.width_ok = !s.upper.is_infinite && (s.upper.as_double() - s.lower <= 10 * opt.tol);
    return s;
}

StartAnalysis start_position_analysis(const ValueTable& vt) {
    StartAnalysis a;
    a.worst_value = a.best_value = vt.values[0];
    for (int v = 1; v < static_cast<int>(vt.values.size()); ++v) {
        if (vt.values[v] > a.worst_value) {
            a.worst_value = vt.values[v];
            a.worst_start = v;
        }
        if (vt.values[v] < a.best_value) {
            a.best_value = vt.values[v];
            a.best_start = v;
        }
    }
    return a;
}

}  // namespace pursuit
