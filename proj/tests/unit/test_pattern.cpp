#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "monkey/pattern_matcher.hpp"
#include "oracles.hpp"

using monkey::Alphabet;
using monkey::borders;
using monkey::failure_function;
using monkey::NormalizedText;
using monkey::PatternMatcher;

namespace {

const Alphabet& quad() {
    static const Alphabet a("abcd");
    return a;
}

std::string random_word(std::mt19937_64& rng, int m, int len) {
    std::string s;
    for (int i = 0; i < len; ++i)
        s += quad().symbol(int(rng() % std::uint64_t(m)));
    return s;
}

std::vector<int> indices(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(quad().index_of(c));
    return out;
}

} // namespace

TEST_CASE("failure function: worked examples and the failure[j] < j bound") {
    CHECK(failure_function("abab") == std::vector<int>{0, 0, 0, 1, 2});
    CHECK(failure_function("aaa") == std::vector<int>{0, 0, 1, 2});
    CHECK(failure_function("abc") == std::vector<int>{0, 0, 0, 0});
    CHECK(failure_function("aabaaab") == std::vector<int>{0, 0, 1, 0, 1, 2, 2, 3});
    CHECK(failure_function("") == std::vector<int>{0});

    std::mt19937_64 rng(101);
    for (int it = 0; it < 500; ++it) {
        std::string p = random_word(rng, 2 + int(rng() % 3), 1 + int(rng() % 20));
        auto fail = failure_function(p);
        REQUIRE(fail.size() == p.size() + 1);
        for (std::size_t j = 1; j < fail.size(); ++j) {
            CHECK(fail[j] < int(j));
            CHECK(fail[j] >= 0);
            // the border it names really is one
            CHECK(p.compare(0, std::size_t(fail[j]), p, j - std::size_t(fail[j]),
                            std::size_t(fail[j])) == 0);
        }
    }
}

TEST_CASE("borders: worked examples, always ending in the full length") {
    auto b = [](const std::string& s) {
        return borders(NormalizedText(s, quad()));
    };
    CHECK(b("aaa") == std::vector<int>{1, 2, 3});
    CHECK(b("abc") == std::vector<int>{3});
    CHECK(b("abab") == std::vector<int>{2, 4});
    CHECK(b("a") == std::vector<int>{1});
    CHECK(b("abcab") == std::vector<int>{2, 5});
    CHECK_THROWS_AS(borders(NormalizedText("", quad())), std::invalid_argument);
}

TEST_CASE("borders match the quadratic oracle") {
    std::mt19937_64 rng(202);
    for (int it = 0; it < 1000; ++it) {
        std::string p = random_word(rng, 2 + int(rng() % 2), 1 + int(rng() % 12));
        CHECK(borders(NormalizedText(p, quad())) == oracles::naive_borders(p));
    }
}

TEST_CASE("matcher accepts on exactly the last pattern symbol") {
    std::mt19937_64 rng(303);
    for (int it = 0; it < 300; ++it) {
        std::string p = random_word(rng, 2 + int(rng() % 3), 1 + int(rng() % 15));
        NormalizedText pat(p, quad());
        PatternMatcher matcher(pat);
        CHECK(matcher.length() == int(p.size()));
        for (std::size_t i = 0; i < p.size(); ++i) {
            bool hit = matcher.feed(quad().index_of(p[i]));
            CHECK(hit == (i + 1 == p.size()));
        }
    }
}

TEST_CASE("every transition agrees with the direct-rescan automaton") {
    std::mt19937_64 rng(404);
    for (int it = 0; it < 200; ++it) {
        int m = 2 + int(rng() % 3);
        std::string p = random_word(rng, m, 1 + int(rng() % 10));
        NormalizedText pat(p, quad());
        PatternMatcher matcher(pat);
        auto pidx = indices(p);
        // state l included: the table keeps running past acceptance
        for (int s = 0; s <= int(p.size()); ++s) {
            for (int c = 0; c < m; ++c) {
                matcher.reset();
                for (int i = 0; i < s; ++i) matcher.feed(pidx[std::size_t(i)]);
                REQUIRE(matcher.state() == s);
                matcher.feed(c);
                CHECK(matcher.state() == oracles::rescan_step(pidx, s, c));
            }
        }
    }
}

TEST_CASE("first-occurrence position matches std::string::find") {
    std::mt19937_64 rng(505);
    for (int it = 0; it < 5000; ++it) {
        int m = 2 + int(rng() % 2);
        std::string p = random_word(rng, m, 1 + int(rng() % 6));
        std::string stream = random_word(rng, m, 1 + int(rng() % 600));
        NormalizedText pat(p, quad());
        PatternMatcher matcher(pat);
        long long got = -1;
        for (std::size_t i = 0; i < stream.size(); ++i) {
            if (matcher.feed(quad().index_of(stream[i]))) {
                got = static_cast<long long>(i) + 1;
                break;
            }
        }
        CHECK(got == oracles::naive_first_occurrence(stream, p));
    }
}

TEST_CASE("overlapping occurrences keep arriving after the first accept") {
    PatternMatcher matcher(NormalizedText("aa", quad()));
    CHECK_FALSE(matcher.feed(0));
    CHECK(matcher.feed(0));
    CHECK(matcher.feed(0)); // "aaa" contains a second overlapping "aa"
    CHECK_FALSE(matcher.feed(1));
    CHECK_FALSE(matcher.feed(0));
    CHECK(matcher.feed(0));
}

TEST_CASE("reset and accessors") {
    NormalizedText pat("abab", quad());
    PatternMatcher matcher(pat);
    matcher.feed(0);
    matcher.feed(1);
    CHECK(matcher.state() == 2);
    matcher.reset();
    CHECK(matcher.state() == 0);
    CHECK(matcher.failure() == failure_function("abab"));
}

TEST_CASE("state table length guard") {
    std::string long_ok(1000, 'a');
    CHECK_NOTHROW(PatternMatcher(NormalizedText(long_ok, quad())));
    std::string too_long(65535, 'a');
    CHECK_THROWS_AS(PatternMatcher(NormalizedText(too_long, quad())),
                    std::invalid_argument);
    CHECK_THROWS_AS(PatternMatcher(NormalizedText("", quad())),
                    std::invalid_argument);
}
