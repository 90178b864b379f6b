#include <random>

#include "doctest.h"
#include "scl/errors.hpp"
#include "scl/word.hpp"
#include "support/corpus.hpp"

using namespace scl;

TEST_CASE("parse_word transliterates case as inversion") {
    const auto p = parse_word("abAB");
    REQUIRE(p.letters.size() == 4);
    CHECK(p.letters[0] == Letter{1, 1});
    CHECK(p.letters[1] == Letter{2, 1});
    CHECK(p.letters[2] == Letter{1, -1});
    CHECK(p.letters[3] == Letter{2, -1});
    CHECK(p.rank == 2);

    const auto fig = parse_word("ababABaBAbAB");
    CHECK(fig.letters.size() == 12);
    CHECK(to_string(fig.letters) == "ababABaBAbAB");
    CHECK(parse_word("cz").rank == 26);
}

TEST_CASE("parse_word rejects bad input") {
    CHECK_THROWS_AS(parse_word("ab1"), InputError);
    CHECK_THROWS_AS(parse_word(""), InputError);
    CHECK_THROWS_AS(parse_word("a b"), InputError);
}

TEST_CASE("cyclically_reduce") {
    auto r = cyclically_reduce(parse_word("abAB"));
    CHECK(r.word.to_string() == "abAB");
    CHECK(r.removed == 0);

    r = cyclically_reduce(parse_word("aabABA"));
    CHECK(r.word.to_string() == "abAB");
    CHECK(r.removed == 2);

    r = cyclically_reduce(parse_word("abBAabAB"));
    CHECK(r.word.to_string() == "abAB");
    CHECK(r.removed == 4);

    CHECK_THROWS_AS(cyclically_reduce(parse_word("aA")), InputError);
    CHECK_THROWS_AS(cyclically_reduce(parse_word("abBA")), InputError);
    CHECK_THROWS_AS(cyclically_reduce(parse_word("abA")), InputError);  // length 1
}

TEST_CASE("cyclically_reduce is idempotent and leaves no cyclic cancellation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(2, 20), pick(0, 5);
    const std::string letters = "abcABC";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        for (int i = len(rng); i > 0; --i) text.push_back(letters[pick(rng)]);
        Reduction r{CyclicWord({{1, 1}, {2, 1}}, 2), 0};
        try {
            r = cyclically_reduce(parse_word(text));
        } catch (const InputError&) {
            continue;
        }
        const auto& w = r.word;
        for (std::size_t i = 1; i <= w.size(); ++i) {
            CHECK_FALSE(w.at(static_cast<long>(i)).is_inverse_of(w.at(static_cast<long>(i) + 1)));
        }
        const auto again = cyclically_reduce(w.letters(), w.rank());
        CHECK(again.removed == 0);
        CHECK(again.word == w);
    }
}

TEST_CASE("CyclicWord rejects non-reduced letter sequences") {
    CHECK_THROWS_AS(CyclicWord({{1, 1}, {1, -1}}, 1), InputError);
    CHECK_THROWS_AS(CyclicWord({{1, 1}}, 1), InputError);
    CHECK_THROWS_AS(CyclicWord({{1, 1}, {3, 1}}, 2), InputError);
    const CyclicWord w({{1, 1}, {2, 1}, {1, -1}, {2, -1}}, 2);
    CHECK(w.wrap(0) == 4);
    CHECK(w.wrap(5) == 1);
    CHECK(w.at(0) == Letter{2, -1});
}

TEST_CASE("exponent_sums") {
    auto sums = exponent_sums(testing::reduced("abAB"));
    CHECK(sums[1] == 0);
    CHECK(sums[2] == 0);

    sums = exponent_sums(testing::reduced("aab"));
    CHECK(sums[1] == 2);
    CHECK(sums[2] == 1);
    CHECK_FALSE(in_commutator_subgroup(testing::reduced("aab")));

    // a: +1 +1 -1 +1 -1 -1, b: +1 +1 -1 -1 +1 -1
    sums = exponent_sums(testing::reduced("ababABaBAbAB"));
    CHECK(sums[1] == 0);
    CHECK(sums[2] == 0);
    CHECK(in_commutator_subgroup(testing::reduced("ababABaBAbAB")));
}

TEST_CASE("exponent_sums is invariant under rotation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = testing::random_reduced_word(rng, 3 + trial % 10, 3);
        const auto base = exponent_sums(testing::reduced(w));
        for (std::size_t k = 1; k < w.size(); ++k) {
            const auto rotated = testing::reduced(testing::rotate_word(w, k));
            auto sums = exponent_sums(rotated);
            for (const auto& [g, s] : base) CHECK(sums[g] == s);
        }
    }
}
