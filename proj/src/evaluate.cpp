#include "pursuit/evaluate.hpp"

#include <limits>
#include <stdexcept>

namespace pursuit {

double Expectation::as_double() const {
    return is_infinite ? std::numeric_limits<double>::infinity() : to_double(value);
}

std::string Expectation::str() const { return is_infinite ? "inf" : fraction_string(value); }

namespace {

void check_sizes(const Walk& w, const Gamble& g) {
    int n = g.size();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (!in_range(w.start)) throw std::invalid_argument("evaluate: walk/gamble size mismatch");
    for (int v : w.prefix) {
        if (!in_range(v)) throw std::invalid_argument("evaluate: walk/gamble size mismatch");
    }
    if (const auto* a = std::get_if<AbsorbTail>(&w.tail)) {
        if (!in_range(a->vertex)) throw std::invalid_argument("evaluate: walk/gamble size mismatch");
    } else {
        const auto& block = std::get<LoopTail>(w.tail).block;
        if (block.empty()) throw std::invalid_argument("evaluate: empty loop block");
        for (int v : block) {
            if (!in_range(v)) throw std::invalid_argument("evaluate: walk/gamble size mismatch");
        }
    }
}

}  // namespace

Expectation expected_capture_time(const Walk& w, const Gamble& g) {
    check_sizes(w, g);

    Rational survival = 1;  // survival through the last processed check
    Rational total = 1;     // running sum of survivals, starts at S(0) = 1
    for (int v : w.prefix) {
        survival *= 1 - g.prob(v);
        total += survival;
    }

    if (const auto* a = std::get_if<AbsorbTail>(&w.tail)) {
        const Rational& q = g.prob(a->vertex);
        if (q == 0) {
            return survival > 0 ? Expectation::infinite() : Expectation::finite(std::move(total));
        }
        total += survival * (1 - q) / q;
        return Expectation::finite(std::move(total));
    }

    const auto& block = std::get<LoopTail>(w.tail).block;
    Rational cycle_sum = 0;      // partial survival sums across one cycle
    Rational cycle_survival = 1; // survival factor of one full cycle
    for (int v : block) {
        cycle_survival *= 1 - g.prob(v);
        cycle_sum += cycle_survival;
    }
    if (cycle_survival == 1) {
        return survival > 0 ? Expectation::infinite() : Expectation::finite(std::move(total));
    }
    total += survival * cycle_sum / (1 - cycle_survival);
    return Expectation::finite(std::move(total));
}

Rational survival_probability(const Walk& w, const Gamble& g, std::int64_t t) {
    check_sizes(w, g);
    if (t < 0) throw std::invalid_argument("survival_probability: negative time");
    Rational s = 1;
    for (std::int64_t step = 1; step <= t; ++step) {
        s *= 1 - g.prob(w.occupancy(step));
        if (s == 0) break;
    }
    return s;
}

Expectation expected_capture_randomized(const RandomizedStrategy& s, const Gamble& g) {
    if (s.components.empty()) throw std::invalid_argument("evaluate: empty strategy");
    Rational total = 0;
    for (const auto& [weight, walk] : s.components) {
        Expectation e = expected_capture_time(walk, g);
        if (e.is_infinite) return Expectation::infinite();
        total += weight * e.value;
    }
    return Expectation::finite(std::move(total));
}

Expectation expected_capture_meta(const RandomizedStrategy& s, const MetaGamble& m) {
    Rational total = 0;
    for (const auto& [weight, gamble] : m.components()) {
        Expectation e = expected_capture_randomized(s, gamble);
        if (e.is_infinite) return Expectation::infinite();
        total += weight * e.value;
    }
    return Expectation::finite(std::move(total));
}

}  // namespace pursuit
