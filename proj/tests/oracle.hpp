#pragma once

// Test-only oracles, kept independent of the closed-form evaluator: the
// expectation is bracketed by direct truncated summation of survival
// probabilities plus a rigorous tail bound.

#include "pursuit/evaluate.hpp"

#include <stdexcept>

namespace pursuit::testing {

// sum_{t=0..horizon} S(t), accumulated stepwise from occupancies.
inline Rational truncated_expectation(const Walk& w, const Gamble& g, int horizon) {
    Rational total = 1, survival = 1;
    for (int t = 1; t <= horizon; ++t) {
        survival *= 1 - g.prob(w.occupancy(t));
        total += survival;
    }
    return total;
}

// Upper bound on sum_{t>horizon} S(t) for walks with a decaying tail;
// requires horizon >= prefix length. Absorbing tails get the exact
// geometric remainder, loops the bound S(horizon) * L / (1 - rho), valid
// because survival over any L consecutive loop steps is exactly rho.
inline Rational tail_remainder_bound(const Walk& w, const Gamble& g, int horizon) {
    if (horizon < static_cast<int>(w.prefix.size())) {
        throw std::invalid_argument("tail_remainder_bound: horizon inside prefix");
    }
    Rational at_horizon = survival_probability(w, g, horizon);
    if (const auto* a = std::get_if<AbsorbTail>(&w.tail)) {
        const Rational& p = g.prob(a->vertex);
        if (p == 0) {
            if (at_horizon != 0) throw std::invalid_argument("tail diverges");
            return 0;
        }
        return at_horizon * (1 - p) / p;
    }
    const auto& block = std::get<LoopTail>(w.tail).block;
    Rational rho = 1;
    for (int v : block) rho *= 1 - g.prob(v);
    if (rho == 1) {
        if (at_horizon != 0) throw std::invalid_argument("tail diverges");
        return 0;
    }
    return at_horizon * Rational(static_cast<int>(block.size())) / (1 - rho);
}

// True iff the tail puts zero mass on every infinitely revisited vertex.
inline bool tail_mass_free(const Walk& w, const Gamble& g) {
    if (const auto* a = std::get_if<AbsorbTail>(&w.tail)) return g.prob(a->vertex) == 0;
    for (int v : std::get<LoopTail>(w.tail).block) {
        if (g.prob(v) != 0) return false;
    }
    return true;
}

}  // namespace pursuit::testing
