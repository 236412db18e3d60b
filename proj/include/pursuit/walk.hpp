#pragma once

#include "pursuit/graph.hpp"
#include "pursuit/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pursuit {

// After the prefix the cop either parks at one vertex forever...
struct AbsorbTail {
    int vertex;
};

// ...or repeats a fixed block of occupancies forever. The block wraps:
// its last entry must be equal or adjacent to its first.
struct LoopTail {
    std::vector<int> block;
};

// A cop trajectory: `start` occupied at time 0 (not a capture check),
// prefix occupied at times 1..k, then the tail.
struct Walk {
    int start = 0;
    std::vector<int> prefix;
    std::variant<AbsorbTail, LoopTail> tail = AbsorbTail{0};

    int occupancy(std::int64_t t) const;
    int end_of_prefix() const { return prefix.empty() ? start : prefix.back(); }
    bool absorbing() const { return std::holds_alternative<AbsorbTail>(tail); }
};

Walk stay_walk(int vertex);

// Checks that consecutive occupancies (including the loop wrap-around) are
// equal or adjacent in g and all ids are in range.
void validate_walk(const Walk& w, const Graph& g);

// "start | p1 p2 ... pk | absorb a"  or  "start | p1 ... pk | loop c1 ... cL"
Walk parse_walk(const std::string& literal);
std::string format_walk(const Walk& w);

// Finite mixture of walks with exact positive weights summing to 1.
struct RandomizedStrategy {
    std::vector<std::pair<Rational, Walk>> components;
};

void validate_strategy(const RandomizedStrategy& s, const Graph& g);

}  // namespace pursuit
