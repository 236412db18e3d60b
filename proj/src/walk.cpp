#include "pursuit/walk.hpp"

#include <sstream>
#include <stdexcept>

namespace pursuit {

int Walk::occupancy(std::int64_t t) const {
    if (t <= 0) return start;
    auto k = static_cast<std::int64_t>(prefix.size());
    if (t <= k) return prefix[t - 1];
    if (const auto* a = std::get_if<AbsorbTail>(&tail)) return a->vertex;
    const auto& block = std::get<LoopTail>(tail).block;
    return block[(t - k - 1) % static_cast<std::int64_t>(block.size())];
}

Walk stay_walk(int vertex) { return Walk{vertex, {}, AbsorbTail{vertex}}; }

namespace {

void check_step(const Graph& g, int u, int v, const char* where) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument(std::string("walk: vertex out of range in ") + where);
    }
    if (u != v && !g.adjacent(u, v)) {
        throw std::invalid_argument(std::string("walk: step ") + std::to_string(u) + " -> " +
                                    std::to_string(v) + " is not an edge (" + where + ")");
    }
}

}  // namespace

void validate_walk(const Walk& w, const Graph& g) {
    if (w.start < 0 || w.start >= g.vertex_count()) {
        throw std::invalid_argument("walk: start vertex out of range");
    }
    int cur = w.start;
    for (int v : w.prefix) {
        check_step(g, cur, v, "prefix");
        cur = v;
    }
    if (const auto* a = std::get_if<AbsorbTail>(&w.tail)) {
        check_step(g, cur, a->vertex, "absorb");
    } else {
        const auto& block = std::get<LoopTail>(w.tail).block;
        if (block.empty()) throw std::invalid_argument("walk: empty loop block");
        check_step(g, cur, block.front(), "loop entry");
        for (size_t i = 0; i + 1 < block.size(); ++i) {
            check_step(g, block[i], block[i + 1], "loop");
        }
        check_step(g, block.back(), block.front(), "loop wrap");
    }
}

Walk parse_walk(const std::string& literal) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : literal) {
        if (c == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3) {
        throw std::invalid_argument("walk literal: expected 'start | prefix | tail'");
    }

    Walk w;
    {
        std::istringstream s(parts[0]);
        std::string extra;
        if (!(s >> w.start) || (s >> extra)) {
            throw std::invalid_argument("walk literal: malformed start segment");
        }
    }
    {
        std::istringstream s(parts[1]);
        int v;
        while (s >> v) w.prefix.push_back(v);
        if (!s.eof()) throw std::invalid_argument("walk literal: malformed prefix segment");
    }
    {
        std::istringstream s(parts[2]);
        std::string kind;
        if (!(s >> kind)) throw std::invalid_argument("walk literal: missing tail");
        std::vector<int> vs;
        int v;
        while (s >> v) vs.push_back(v);
        if (!s.eof()) throw std::invalid_argument("walk literal: malformed tail segment");
        if (kind == "absorb") {
            if (vs.size() != 1) {
                throw std::invalid_argument("walk literal: absorb takes one vertex");
            }
            w.tail = AbsorbTail{vs[0]};
        } else if (kind == "loop") {
            if (vs.empty()) throw std::invalid_argument("walk literal: loop takes >= 1 vertex");
            w.tail = LoopTail{std::move(vs)};
        } else {
            throw std::invalid_argument("walk literal: unknown tail kind '" + kind + "'");
        }
    }
    return w;
}

std::string format_walk(const Walk& w) {
    std::ostringstream out;
    out << w.start << " |";
    for (int v : w.prefix) out << ' ' << v;
    out << " | ";
    if (const auto* a = std::get_if<AbsorbTail>(&w.tail)) {
        out << "absorb " << a->vertex;
    } else {
        out << "loop";
        for (int v : std::get<LoopTail>(w.tail).block) out << ' ' << v;
    }
    return out.str();
}

void validate_strategy(const RandomizedStrategy& s, const Graph& g) {
    if (s.components.empty()) throw std::invalid_argument("strategy: no components");
    Rational sum = 0;
    for (const auto& [w, walk] : s.components) {
        if (w <= 0) throw std::invalid_argument("strategy: nonpositive weight");
        validate_walk(walk, g);
        sum += w;
    }
    if (sum != 1) {
        throw std::invalid_argument("strategy: weights sum to " + fraction_string(sum) +
                                    ", expected 1");
    }
}

}  // namespace pursuit
