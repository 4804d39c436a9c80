#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "monkey/simulate.hpp"

using monkey::Alphabet;
using monkey::Educated;
using monkey::IIDGeneral;
using monkey::NormalizedText;
using monkey::simulate_waiting;
using monkey::TrialSummary;
using monkey::UniformRandom;

namespace {

NormalizedText pat(const std::string& s) {
    return NormalizedText(s, Alphabet::canonical());
}

} // namespace

TEST_CASE("empirical means land within three standard errors of exact waits") {
    auto check_near = [](const TrialSummary& r, double exact) {
        INFO("mean ", r.mean, " exact ", exact, " stderr ", r.stderr_);
        CHECK(std::abs(r.mean - exact) <= 3.0 * r.stderr_);
        CHECK(r.stderr_ > 0.0);
    };
    check_near(simulate_waiting(UniformRandom{2}, pat("aa"), 100000, 11), 6.0);
    check_near(simulate_waiting(UniformRandom{2}, pat("abab"), 100000, 12),
               20.0);
    check_near(simulate_waiting(UniformRandom{27}, pat("abc"), 20000, 13),
               19683.0);
    // P(a) = 0.5 makes "a" a coin flip: expected wait 2
    check_near(simulate_waiting(IIDGeneral{{0.5, 0.25, 0.25}}, pat("a"),
                                100000, 14),
               2.0);
}

TEST_CASE("summary invariants: bounds and ordering") {
    auto r = simulate_waiting(UniformRandom{2}, pat("abab"), 20000, 21);
    CHECK(r.trials == 20000);
    CHECK(r.seed == 21);
    CHECK(r.min >= 4); // cannot finish before the pattern length
    CHECK(r.max >= r.min);
    CHECK(r.mean >= double(r.min));
    CHECK(r.mean <= double(r.max));
}

TEST_CASE("summaries are byte-identical across worker counts and reruns") {
    auto a = simulate_waiting(UniformRandom{3}, pat("aba"), 30000, 77, 1);
    auto b = simulate_waiting(UniformRandom{3}, pat("aba"), 30000, 77, 3);
    auto c = simulate_waiting(UniformRandom{3}, pat("aba"), 30000, 77, 3);
    CHECK(a.to_json_line() == b.to_json_line());
    CHECK(b.to_json_line() == c.to_json_line());
    // a different seed must actually change the draw
    auto d = simulate_waiting(UniformRandom{3}, pat("aba"), 30000, 78, 3);
    CHECK(a.to_json_line() != d.to_json_line());
}

TEST_CASE("json line parses and round-trips the fields") {
    auto r = simulate_waiting(UniformRandom{2}, pat("ab"), 5000, 5, 2);
    auto j = nlohmann::json::parse(r.to_json_line());
    CHECK(j.at("trials").get<std::uint64_t>() == r.trials);
    CHECK(j.at("seed").get<std::uint64_t>() == r.seed);
    CHECK(j.at("min").get<std::uint64_t>() == r.min);
    CHECK(j.at("max").get<std::uint64_t>() == r.max);
    // the line prints six fixed decimals, so parity holds to 5e-7 absolute
    CHECK(std::abs(j.at("mean").get<double>() - r.mean) <= 5e-7);
    CHECK(std::abs(j.at("stderr").get<double>() - r.stderr_) <= 5e-7);
    CHECK(r.to_json_line().find('\n') == std::string::npos);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(simulate_waiting(UniformRandom{2}, pat("abc"), 1000, 1),
                    std::invalid_argument); // 'c' outside a 2-symbol model
    CHECK_THROWS_AS(simulate_waiting(UniformRandom{2}, pat("aa"), 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_waiting(Educated{0.863}, pat("aa"), 1000, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_waiting(UniformRandom{2}, pat(""), 1000, 1),
                    std::invalid_argument);
}

TEST_CASE("throughput benchmark") {
    CHECK(monkey::throughput_benchmark(UniformRandom{27}, 0.0) == 0.0);
    CHECK(monkey::throughput_benchmark(UniformRandom{27}, 0.05) > 0.0);
}
