#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>
#include <stdexcept>

#include "toepblock/words.hpp"

using namespace toepblock;

namespace {

// (2t-1)!! computed independently of the enumerator.
std::uint64_t double_factorial_count(int t) {
    std::uint64_t v = 1;
    for (int i = 3; i <= 2 * t - 1; i += 2) v *= static_cast<std::uint64_t>(i);
    return v;
}

}  // namespace

TEST_CASE("enumeration sizes match the pairing count") {
    const std::uint64_t expected[] = {1, 3, 15, 105, 945, 10395};
    for (int t = 1; t <= 6; ++t) {
        auto words = enumerate_pair_matched(t);
        CHECK(words.size() == expected[t - 1]);
        CHECK(words.size() == double_factorial_count(t));
    }
}

TEST_CASE("enumerated words are canonical, sorted, and distinct") {
    for (int t = 1; t <= 4; ++t) {
        auto words = enumerate_pair_matched(t);
        std::set<std::string> seen;
        for (const Word& w : words) {
            CHECK(w.length() == 2 * t);
            CHECK(w.t() == t);
            CHECK(w.letters()[0] == 'a');
            CHECK(seen.insert(w.letters()).second);
            // Reconstruction re-runs the canonical-form validation.
            CHECK_NOTHROW(Word{w.letters()});
        }
        for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
    }
}

TEST_CASE("enumeration rejects out-of-range t") {
    CHECK_THROWS_AS(enumerate_pair_matched(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pair_matched(7), std::invalid_argument);
}

TEST_CASE("catalan counts per half-length") {
    const int expected[] = {1, 2, 5, 14};
    for (int t = 1; t <= 4; ++t) {
        int count = 0;
        for (const Word& w : enumerate_pair_matched(t)) count += is_catalan(w) ? 1 : 0;
        CHECK(count == expected[t - 1]);
    }
}

TEST_CASE("catalan witnesses") {
    CHECK(is_catalan(Word{"aa"}));
    CHECK(is_catalan(Word{"aabb"}));
    CHECK(is_catalan(Word{"abba"}));
    CHECK(is_catalan(Word{"abccba"}));
    CHECK(is_catalan(Word{"aabbcc"}));
    CHECK_FALSE(is_catalan(Word{"abab"}));
    CHECK_FALSE(is_catalan(Word{"abcabc"}));
    CHECK_FALSE(is_catalan(Word{"abacbc"}));
}

TEST_CASE("occurrence bookkeeping on abab") {
    Word w{"abab"};
    CHECK(w.t() == 2);
    CHECK(w.length() == 4);
    CHECK(w.letter_at(1) == 0);
    CHECK(w.letter_at(2) == 1);
    CHECK(w.letter_at(3) == 0);
    CHECK(w.letter_at(4) == 1);
    CHECK(w.first_of(0) == 1);
    CHECK(w.second_of(0) == 3);
    CHECK(w.first_of(1) == 2);
    CHECK(w.second_of(1) == 4);
    CHECK(w.is_first_occurrence(1));
    CHECK(w.is_first_occurrence(2));
    CHECK_FALSE(w.is_first_occurrence(3));
    CHECK_FALSE(w.is_first_occurrence(4));
    CHECK(generating_vertices(w) == std::vector<int>{1, 2});
    CHECK(matched_position(w, 1) == 3);
    CHECK(matched_position(w, 2) == 4);
}

TEST_CASE("malformed words are rejected") {
    CHECK_THROWS_AS(Word{""}, std::invalid_argument);
    CHECK_THROWS_AS(Word{"a"}, std::invalid_argument);
    CHECK_THROWS_AS(Word{"aba"}, std::invalid_argument);
    CHECK_THROWS_AS(Word{"ab"}, std::invalid_argument);       // letters occur once
    CHECK_THROWS_AS(Word{"aaab"}, std::invalid_argument);     // letter occurs thrice
    CHECK_THROWS_AS(Word{"aabbaa"}, std::invalid_argument);   // letter occurs thrice
    CHECK_THROWS_AS(Word{"bbaa"}, std::invalid_argument);     // not canonical
    CHECK_THROWS_AS(Word{"aAbb"}, std::invalid_argument);     // not lowercase
    CHECK_THROWS_AS(Word{"a1b1"}, std::invalid_argument);
}
