#include "pursuit/gamble.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pursuit;

TEST_CASE("named gambles") {
    CHECK(uniform_gamble(1).probs() == std::vector<Rational>{1});
    CHECK(uniform_gamble(4).probs() == std::vector<Rational>(4, Rational(1, 4)));
    {
        Gamble thirds = uniform_gamble(3);
        Rational sum = 0;
        for (const auto& p : thirds.probs()) sum += p;
        CHECK(sum == 1);
    }

    CHECK(delta_gamble(3, 2).probs() == std::vector<Rational>{0, 0, 1});
    CHECK(delta_gamble(1, 0).probs() == std::vector<Rational>{1});
    CHECK_THROWS_AS(delta_gamble(2, 5), std::invalid_argument);

    Gamble leaves = uniform_on_subset(5, {1, 2, 3, 4});
    CHECK(leaves.prob(0) == 0);
    CHECK(leaves.prob(1) == Rational(1, 4));
    CHECK(uniform_on_subset(4, {0, 1, 2, 3}) == uniform_gamble(4));
    CHECK(uniform_on_subset(6, {2}) == delta_gamble(6, 2));
    CHECK_THROWS_AS(uniform_on_subset(4, {}), std::invalid_argument);
}

TEST_CASE("gamble invariants are exact") {
    CHECK_THROWS_AS(Gamble({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(Gamble({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(Gamble({}), std::invalid_argument);
}

TEST_CASE("meta-gambles") {
    MetaGamble sitter = random_sitter_meta(4, {1, 2, 3});
    CHECK(sitter.components().size() == 3);
    for (const auto& [w, g] : sitter.components()) CHECK(w == Rational(1, 3));
    CHECK(sitter.components()[1].second == delta_gamble(4, 2));

    MetaGamble lone = random_sitter_meta(3, {2});
    CHECK(lone.components().size() == 1);
    CHECK(lone.components()[0].first == 1);

    MetaGamble ends = random_sitter_meta(3, {0, 2});
    CHECK(ends.components()[0].first == Rational(1, 2));
    CHECK_THROWS_AS(random_sitter_meta(3, {}), std::invalid_argument);
}

TEST_CASE("interval meta over a cycle") {
    MetaGamble full = interval_meta(5, 5);
    for (const auto& [w, g] : full.components()) CHECK(g == uniform_gamble(5));

    MetaGamble deltas = interval_meta(4, 1);
    for (int i = 0; i < 4; ++i) {
        CHECK(deltas.components()[i].first == Rational(1, 4));
        CHECK(deltas.components()[i].second == delta_gamble(4, i));
    }

    MetaGamble thirds = interval_meta(9, 3);
    CHECK(thirds.components().size() == 9);
    CHECK(thirds.components()[8].second == uniform_on_subset(9, {8, 0, 1}));
    CHECK_THROWS_AS(interval_meta(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(interval_meta(4, 5), std::invalid_argument);
}

TEST_CASE("collapse yields a valid averaged gamble") {
    MetaGamble m = interval_meta(6, 2);
    CHECK(collapse(m) == uniform_gamble(6));

    MetaGamble mixed = mix_meta(Rational(1, 4), random_sitter_meta(3, {0}),
                                MetaGamble{{{Rational(1), uniform_gamble(3)}}});
    Gamble avg = collapse(mixed);
    CHECK(avg.prob(0) == Rational(1, 4) + Rational(1, 4));
    CHECK(avg.prob(1) == Rational(1, 4));
}

TEST_CASE("gamble files") {
    Gamble g = parse_gamble("0 1/2\n2 1/4\n3 0.25\n", 4);
    CHECK(g.prob(0) == Rational(1, 2));
    CHECK(g.prob(1) == 0);  // omitted vertices get probability 0
    CHECK(g.prob(3) == Rational(1, 4));

    CHECK_THROWS_WITH_AS(parse_gamble("0 1/2\n1 1/4\n", 2), doctest::Contains("sum to"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_gamble("0 1/2\n0 1/2\n", 2), doctest::Contains("assigned twice"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_gamble("5 1\n", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_gamble("0 oops\n", 2), std::invalid_argument);
    CHECK_THROWS_AS(load_gamble("/nonexistent/g.gamble", 3), std::runtime_error);
}
