#pragma once

#include "pursuit/gamble.hpp"
#include "pursuit/walk.hpp"

#include <cstdint>

namespace pursuit {

// Expected capture time: an exact rational >= 1, or Infinite when the
// walk's tail puts no occupancy on any positive-mass vertex while survival
// is still possible.
struct Expectation {
    bool is_infinite = false;
    Rational value = 0;

    static Expectation infinite() { return {true, 0}; }
    static Expectation finite(Rational v) { return {false, std::move(v)}; }

    double as_double() const;
    std::string str() const;  // "a/b" or "inf"

    bool operator==(const Expectation& o) const {
        return is_infinite == o.is_infinite && (is_infinite || value == o.value);
    }
};

// E[T] = sum_{t>=0} P(no capture through t), capture checked at the
// occupied vertex at every t >= 1 (time 0 is not a check). Closed form:
// a finite sum over the prefix plus a geometric tail.
Expectation expected_capture_time(const Walk& w, const Gamble& g);

// P(no capture through time t): the product of (1 - p) over occupancies
// 1..t. Empty product at t = 0.
Rational survival_probability(const Walk& w, const Gamble& g, std::int64_t t);

Expectation expected_capture_randomized(const RandomizedStrategy& s, const Gamble& g);
Expectation expected_capture_meta(const RandomizedStrategy& s, const MetaGamble& m);

}  // namespace pursuit
