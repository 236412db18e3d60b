#include "pursuit/evaluate.hpp"
#include "pursuit/generators.hpp"

#include <doctest.h>

#include "oracle.hpp"

#include <stdexcept>

using namespace pursuit;

TEST_CASE("walk literals round-trip") {
    Walk w = parse_walk("0 | 1 2 | absorb 3");
    CHECK(w.start == 0);
    CHECK(w.prefix == std::vector<int>{1, 2});
    CHECK(std::get<AbsorbTail>(w.tail).vertex == 3);
    CHECK(format_walk(w) == "0 | 1 2 | absorb 3");

    Walk loop = parse_walk("2 | | loop 1 0 1 2");
    CHECK(loop.prefix.empty());
    CHECK(format_walk(loop) == "2 | | loop 1 0 1 2");
    CHECK(loop.occupancy(0) == 2);
    CHECK(loop.occupancy(1) == 1);
    CHECK(loop.occupancy(5) == 1);  // block repeats

    CHECK_THROWS_AS(parse_walk("0 | 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_walk("0 | 1 | wander 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_walk("0 | 1 | absorb 2 3"), std::invalid_argument);
}

TEST_CASE("walk validation enforces adjacency including the wrap") {
    Graph p4 = path_graph(4);
    validate_walk(parse_walk("0 | 1 2 | absorb 3"), p4);
    validate_walk(parse_walk("0 | 0 1 | loop 2 1"), p4);
    CHECK_THROWS_AS(validate_walk(parse_walk("0 | 2 | absorb 3"), p4), std::invalid_argument);
    // block steps are fine here but the wrap 3 -> 1 is not an edge
    CHECK_THROWS_AS(validate_walk(parse_walk("0 | 1 | loop 1 2 3"), p4), std::invalid_argument);
    CHECK_THROWS_AS(validate_walk(parse_walk("0 | 1 | absorb 9"), p4), std::invalid_argument);
}

TEST_CASE("expected capture time, closed form") {
    // waiting at v is geometric with mean 1/p
    Gamble quarter({Rational(1, 4), Rational(3, 4)});
    CHECK(expected_capture_time(stay_walk(0), quarter) == Expectation::finite(4));

    // any walk against the uniform gamble: exactly n
    Graph c5 = cycle_graph(5);
    Walk around{0, {1, 2}, LoopTail{{3, 4, 0, 1, 2}}};
    CHECK(expected_capture_time(around, uniform_gamble(5)) == Expectation::finite(5));

    // deterministic pursuit: straight to the delta and capture on arrival
    Walk straight = parse_walk("0 | 1 2 3 | absorb 3");
    CHECK(expected_capture_time(straight, delta_gamble(4, 3)) == Expectation::finite(3));

    // star with mass 1/2 on one leaf: move there and wait
    Gamble star_g({Rational(0), Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    Walk to_heavy = parse_walk("0 | | absorb 1");
    CHECK(expected_capture_time(to_heavy, star_g) == Expectation::finite(2));
}

TEST_CASE("survival probability") {
    Gamble uniform = uniform_gamble(4);
    Walk w = parse_walk("0 | 1 | loop 2 3 0 1");
    CHECK(survival_probability(w, uniform, 0) == 1);
    Rational q(3, 4);
    CHECK(survival_probability(w, uniform, 7) == q * q * q * q * q * q * q);

    // a walk that never touches the delta's vertex survives forever
    Walk dodge{0, {}, LoopTail{{1, 0}}};
    CHECK(survival_probability(dodge, delta_gamble(4, 3), 25) == 1);

    SplitMix64 rng(7);
    Graph g = random_connected_graph(8, 0.3, rng);
    Gamble gm = random_gamble(8, 50, rng);
    Walk rw = random_walk(g, 12, rng);
    Rational prev = 1;
    for (int t = 0; t <= 40; ++t) {
        Rational s = survival_probability(rw, gm, t);
        CHECK(s <= prev);
        prev = s;
    }
}

TEST_CASE("closed form matches truncated summation with tail bound") {
    SplitMix64 rng(11);
    int checked = 0, attempts = 0;
    while (checked < 200 && attempts < 1000) {
        ++attempts;
        int n = rng.next_int(2, 12);
        Graph g = random_connected_graph(n, 0.3, rng);
        Gamble gm = random_gamble(n, 20, rng);
        Walk w = random_walk(g, 10, rng);
        Expectation e = expected_capture_time(w, gm);
        if (e.is_infinite) {
            CHECK(testing::tail_mass_free(w, gm));
            CHECK(survival_probability(w, gm, static_cast<int>(w.prefix.size())) > 0);
            continue;
        }
        CHECK(e.value >= 1);
        int horizon = static_cast<int>(w.prefix.size()) + 64;
        Rational truncated = testing::truncated_expectation(w, gm, horizon);
        Rational bound = testing::tail_remainder_bound(w, gm, horizon);
        CHECK(truncated <= e.value);
        CHECK(e.value <= truncated + bound);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("uniform-gamble universality") {
    SplitMix64 rng(13);
    for (int i = 0; i < 50; ++i) {
        int n = rng.next_int(2, 50);
        Graph g = random_connected_graph(n, 0.15, rng);
        Walk w = random_walk(g, 2 * n, rng);
        CHECK(expected_capture_time(w, uniform_gamble(n)) == Expectation::finite(n));
    }
}

TEST_CASE("finiteness classification") {
    SplitMix64 rng(17);
    for (int i = 0; i < 120; ++i) {
        int n = rng.next_int(2, 10);
        Graph g = random_connected_graph(n, 0.4, rng);
        Gamble gm = rng.next_below(2) ? random_gamble(n, 3, rng) : delta_gamble(n, 0);
        Walk w = random_walk(g, 6, rng);
        bool infinite = expected_capture_time(w, gm).is_infinite;
        bool expected = testing::tail_mass_free(w, gm) &&
                        survival_probability(w, gm, static_cast<int>(w.prefix.size())) > 0;
        CHECK(infinite == expected);
    }
}

TEST_CASE("randomized strategies mix linearly") {
    Gamble uniform = uniform_gamble(4);
    Graph c4 = cycle_graph(4);
    RandomizedStrategy circle{{{Rational(1, 2), Walk{0, {}, LoopTail{{1, 2, 3, 0}}}},
                               {Rational(1, 2), Walk{0, {}, LoopTail{{3, 2, 1, 0}}}}}};
    validate_strategy(circle, c4);
    CHECK(expected_capture_randomized(circle, uniform) == Expectation::finite(4));

    RandomizedStrategy single{{{Rational(1), stay_walk(2)}}};
    CHECK(expected_capture_randomized(single, uniform) ==
          expected_capture_time(stay_walk(2), uniform));

    // two-fold nesting flattened by hand equals the weighted mixture
    Gamble skew({Rational(1, 2), Rational(1, 3), Rational(1, 6), Rational(0)});
    RandomizedStrategy flat{{{Rational(1, 6), stay_walk(0)},
                             {Rational(1, 3), stay_walk(1)},
                             {Rational(1, 2), Walk{0, {1}, LoopTail{{2, 1}}}}}};
    Expectation direct = expected_capture_randomized(flat, skew);
    Rational by_parts = Rational(1, 6) * expected_capture_time(stay_walk(0), skew).value +
                        Rational(1, 3) * expected_capture_time(stay_walk(1), skew).value +
                        Rational(1, 2) *
                            expected_capture_time(Walk{0, {1}, LoopTail{{2, 1}}}, skew).value;
    CHECK(direct == Expectation::finite(by_parts));

    // infinity propagates through positive weights
    RandomizedStrategy partly_lost{{{Rational(1, 2), stay_walk(3)},
                                    {Rational(1, 2), stay_walk(0)}}};
    CHECK(expected_capture_randomized(partly_lost, skew).is_infinite);
}

TEST_CASE("meta opponents weight component gambles") {
    RandomizedStrategy single{{{Rational(1), stay_walk(0)}}};
    MetaGamble one{{{Rational(1), uniform_gamble(3)}}};
    CHECK(expected_capture_meta(single, one) == expected_capture_randomized(single, uniform_gamble(3)));

    // stay at 0 vs sitter on {0,2}: capture immediately or never
    MetaGamble sitter = random_sitter_meta(3, {0, 2});
    CHECK(expected_capture_meta(single, sitter).is_infinite);

    MetaGamble halves = mix_meta(Rational(1, 2), MetaGamble{{{Rational(1), delta_gamble(3, 0)}}},
                                 MetaGamble{{{Rational(1), uniform_gamble(3)}}});
    CHECK(expected_capture_meta(single, halves) == Expectation::finite(2));
}

TEST_CASE("size mismatches are rejected") {
    CHECK_THROWS_AS(expected_capture_time(parse_walk("0 | | absorb 5"), uniform_gamble(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_capture_time(parse_walk("7 | | absorb 7"), uniform_gamble(3)),
                    std::invalid_argument);
}
