#include "monkey/simulate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "monkey/pattern_matcher.hpp"
#include "monkey/rng.hpp"

namespace monkey {

namespace {

struct Accumulator {
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max = 0;

    void add(std::uint64_t x) {
        sum += x;
        sum_sq += static_cast<unsigned __int128>(x) * x;
        if (x < min) min = x;
        if (x > max) max = x;
    }
    // order-independent merge: parallel runs reduce to the same totals
    void merge(const Accumulator& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        if (o.min < min) min = o.min;
        if (o.max > max) max = o.max;
    }
};

// Inverse-CDF sampler for a fixed distribution; uniform models skip it.
struct CdfSampler {
    std::vector<double> cdf;
    explicit CdfSampler(const std::vector<double>& probs) {
        double acc = 0.0;
        for (double p : probs) {
            acc += p;
            cdf.push_back(acc);
        }
        cdf.back() = 1.0; // guard against accumulated rounding
    }
    int draw(double u) const {
        // small alphabets: linear scan beats binary search
        for (std::size_t i = 0; i + 1 < cdf.size(); ++i)
            if (u < cdf[i]) return static_cast<int>(i);
        return static_cast<int>(cdf.size() - 1);
    }
};

std::uint64_t run_trial_uniform(PatternMatcher& matcher, SplitMix64 rng,
                                std::uint32_t m) {
    matcher.reset();
    std::uint64_t steps = 0;
    for (;;) {
        ++steps;
        if (matcher.feed(static_cast<int>(rng.next_below(m)))) return steps;
    }
}

std::uint64_t run_trial_iid(PatternMatcher& matcher, SplitMix64 rng,
                            const CdfSampler& sampler) {
    matcher.reset();
    std::uint64_t steps = 0;
    for (;;) {
        ++steps;
        if (matcher.feed(sampler.draw(rng.next_double()))) return steps;
    }
}

double u128_to_double(unsigned __int128 v) {
    return static_cast<double>(static_cast<std::uint64_t>(v >> 64)) *
               0x1.0p64 +
           static_cast<double>(static_cast<std::uint64_t>(v));
}

} // namespace

std::string TrialSummary::to_json_line() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "{\"trials\":%llu,\"mean\":%.6f,\"stderr\":%.6f,"
                  "\"min\":%llu,\"max\":%llu,\"seed\":%llu}",
                  static_cast<unsigned long long>(trials), mean, stderr_,
                  static_cast<unsigned long long>(min),
                  static_cast<unsigned long long>(max),
                  static_cast<unsigned long long>(seed));
    return buf;
}

TrialSummary simulate_waiting(const MonkeyModel& source,
                              const NormalizedText& pattern,
                              std::uint64_t trials, std::uint64_t seed,
                              int workers) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    if (source.is_educated())
        throw std::invalid_argument("simulation needs an i.i.d. source");
    if (pattern.length() == 0)
        throw std::invalid_argument("pattern must be nonempty");

    const int m = source.alphabet_size();
    for (char c : pattern.content()) {
        int idx = pattern.alphabet().index_of(c);
        if (idx < 0 || idx >= m)
            throw std::invalid_argument("pattern symbol outside the source");
    }

    if (workers <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        workers = hc == 0 ? 1 : static_cast<int>(hc);
    }
    if (static_cast<std::uint64_t>(workers) > trials)
        workers = static_cast<int>(trials);

    const PatternMatcher proto(pattern);
    std::optional<CdfSampler> sampler;
    if (source.is_iid_general()) sampler.emplace(source.iid_general().probs);

    std::vector<Accumulator> parts(static_cast<std::size_t>(workers));
    auto body = [&](int w) {
        PatternMatcher matcher = proto;
        Accumulator& acc = parts[static_cast<std::size_t>(w)];
        // fixed block split: trial t's stream depends only on (seed, t)
        std::uint64_t lo = trials * static_cast<std::uint64_t>(w) /
                           static_cast<std::uint64_t>(workers);
        std::uint64_t hi = trials * (static_cast<std::uint64_t>(w) + 1) /
                           static_cast<std::uint64_t>(workers);
        for (std::uint64_t t = lo; t < hi; ++t) {
            SplitMix64 rng = SplitMix64::stream(seed, t);
            acc.add(sampler ? run_trial_iid(matcher, rng, *sampler)
                            : run_trial_uniform(matcher, rng,
                                                static_cast<std::uint32_t>(m)));
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }

    Accumulator total;
    for (const auto& p : parts) total.merge(p);

    TrialSummary out;
    out.trials = trials;
    out.seed = seed;
    out.min = total.min;
    out.max = total.max;
    const double n = static_cast<double>(trials);
    out.mean = u128_to_double(total.sum) / n;
    if (trials > 1) {
        double mean_sq = u128_to_double(total.sum_sq) / n;
        double var = (mean_sq - out.mean * out.mean) * (n / (n - 1.0));
        if (var < 0) var = 0; // rounding guard for constant samples
        out.stderr_ = std::sqrt(var / n);
    }
    return out;
}

double throughput_benchmark(const MonkeyModel& source, double seconds) {
    if (source.is_educated())
        throw std::invalid_argument("benchmark needs an i.i.d. source");
    if (seconds <= 0.0) return 0.0;

    const int m = source.alphabet_size();
    // a repeated-symbol pattern keeps the automaton churning through border
    // wraps; matches just restart it, which is the realistic hot loop
    std::string alpha_syms;
    for (int i = 0; i < m; ++i) alpha_syms.push_back(static_cast<char>('a' + i));
    Alphabet local(alpha_syms);
    NormalizedText pattern(std::string(12, 'a'), local);
    PatternMatcher matcher(pattern);

    std::optional<CdfSampler> sampler;
    if (source.is_iid_general()) sampler.emplace(source.iid_general().probs);

    SplitMix64 rng = SplitMix64::stream(0x6d6f6e6b6579ull, 0);
    const auto start = std::chrono::steady_clock::now();
    const auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
    std::uint64_t symbols = 0;
    std::uint64_t sink = 0;
    while (std::chrono::steady_clock::now() < deadline) {
        for (int k = 0; k < 65536; ++k) {
            ++symbols;
            int sym = sampler ? sampler->draw(rng.next_double())
                              : static_cast<int>(rng.next_below(
                                    static_cast<std::uint32_t>(m)));
            sink += static_cast<std::uint64_t>(matcher.feed(sym));
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    // sink keeps the loop from being optimized away
    if (sink == symbols + 1) return -1.0;
    return static_cast<double>(symbols) / elapsed;
}

} // namespace monkey
