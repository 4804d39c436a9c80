#include "monkey/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "monkey/rng.hpp"
#include "monkey/suffix_array.hpp"

namespace monkey {

NGramStats count_ngrams(const NormalizedText& text, int n, std::size_t begin,
                        std::size_t end) {
    if (n < 1) throw std::invalid_argument("n-gram order must be at least 1");
    NGramStats stats;
    stats.order = n;
    const std::string& s = text.content();
    // blocks are keyed by start position, so disjoint [begin, end) ranges
    // partition the block set exactly
    std::size_t last = s.size() < static_cast<std::size_t>(n)
                           ? 0
                           : s.size() - static_cast<std::size_t>(n) + 1;
    end = std::min(end, last);
    for (std::size_t i = begin; i < end; ++i) {
        ++stats.counts[s.substr(i, static_cast<std::size_t>(n))];
        ++stats.total;
    }
    return stats;
}

void merge_ngrams(NGramStats& into, const NGramStats& from) {
    if (into.order != from.order)
        throw std::invalid_argument("cannot merge n-gram stats of different orders");
    for (const auto& [block, count] : from.counts) into.counts[block] += count;
    into.total += from.total;
}

double block_entropy(const NGramStats& stats) {
    if (stats.total == 0) return 0.0;
    double h = 0.0;
    const double total = static_cast<double>(stats.total);
    for (const auto& [block, count] : stats.counts) {
        double p = static_cast<double>(count) / total;
        h -= p * std::log2(p);
    }
    return h;
}

namespace {

NGramStats count_partitioned(const NormalizedText& text, int n, int workers) {
    std::size_t len = text.length();
    if (workers <= 1 || len < 1024) return count_ngrams(text, n, 0, len);
    std::vector<NGramStats> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = len * static_cast<std::size_t>(w) /
                         static_cast<std::size_t>(workers);
        std::size_t hi = len * static_cast<std::size_t>(w + 1) /
                         static_cast<std::size_t>(workers);
        pool.emplace_back([&text, n, lo, hi, w, &parts] {
            parts[static_cast<std::size_t>(w)] = count_ngrams(text, n, lo, hi);
        });
    }
    for (auto& t : pool) t.join();
    NGramStats merged;
    merged.order = n;
    for (const auto& part : parts) merge_ngrams(merged, part);
    return merged;
}

double clamp_rate(double h, int alphabet_size) {
    return std::clamp(h, 0.0, std::log2(static_cast<double>(alphabet_size)));
}

} // namespace

EntropyEstimate ngram_conditional_entropy(const NormalizedText& text, int n,
                                          int workers) {
    if (n < 1) throw std::invalid_argument("n-gram order must be at least 1");
    if (text.length() < static_cast<std::size_t>(n))
        throw std::invalid_argument("text shorter than the n-gram order");
    if (workers < 1) workers = 1;

    NGramStats full = count_partitioned(text, n, workers);
    double h = block_entropy(full);
    if (n > 1) h -= block_entropy(count_partitioned(text, n - 1, workers));

    EntropyEstimate est;
    est.value = clamp_rate(h, text.alphabet().size());
    est.method = "ngram";
    est.parameter = static_cast<std::uint64_t>(n);
    est.sample_size = full.total;
    return est;
}

EntropyEstimate match_length_entropy(const NormalizedText& text,
                                     std::uint32_t window) {
    if (window < 2) throw std::invalid_argument("window must be at least 2");
    const std::string& s = text.content();
    const std::size_t n = s.size();
    const std::size_t w = window;
    if (n < 2 * w)
        throw std::invalid_argument("text must be at least twice the window");

    auto sa = suffix_array(s);
    auto lcp = lcp_array(s, sa);
    RangeMin rmq(lcp);
    std::vector<std::int32_t> rank(n);
    for (std::size_t k = 0; k < n; ++k)
        rank[static_cast<std::size_t>(sa[k])] = static_cast<std::int32_t>(k);

    // lcp between the suffixes ranked a < b is the min of lcp[a+1 .. b]
    auto pair_lcp = [&](std::int32_t a, std::int32_t b) {
        return rmq.min(static_cast<std::size_t>(a) + 1,
                       static_cast<std::size_t>(b) + 1);
    };

    // ranks of the suffixes starting inside the current window [i-w, i)
    std::set<std::int32_t> in_window;
    for (std::size_t j = 0; j < w; ++j) in_window.insert(rank[j]);

    std::uint64_t lambda_sum = 0;
    for (std::size_t i = w; i < n; ++i) {
        std::int32_t r = rank[i];
        std::int32_t best = 0;
        auto above = in_window.lower_bound(r);
        if (above != in_window.end()) best = pair_lcp(r, *above);
        if (above != in_window.begin())
            best = std::max(best, pair_lcp(*std::prev(above), r));
        std::uint64_t match = std::min<std::uint64_t>(
            static_cast<std::uint64_t>(best), w);
        lambda_sum += 1 + match;
        in_window.erase(rank[i - w]);
        in_window.insert(r);
    }

    const std::size_t eligible = n - w;
    double mean = static_cast<double>(lambda_sum) / static_cast<double>(eligible);
    EntropyEstimate est;
    est.value = clamp_rate(std::log2(static_cast<double>(w)) / mean,
                           text.alphabet().size());
    est.method = "matchlen";
    est.parameter = window;
    est.sample_size = eligible;
    return est;
}

MarkovSource MarkovSource::iid(std::vector<double> probs) {
    MarkovSource src;
    src.transition.assign(probs.size(), probs);
    src.initial = std::move(probs);
    src.validate();
    return src;
}

namespace {

void check_distribution(const std::vector<double>& p, std::size_t size,
                        const char* what) {
    if (p.size() != size)
        throw std::invalid_argument(std::string(what) + " has the wrong size");
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string(what) +
                                        " has a negative or non-finite entry");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + " does not sum to 1");
}

// every state reachable from 0 following edges P[i][j] > 0 (or the reverse)
bool reaches_all(const std::vector<std::vector<double>>& p, bool reversed) {
    std::size_t m = p.size();
    std::vector<char> seen(m, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        for (std::size_t j = 0; j < m; ++j) {
            double edge = reversed ? p[j][i] : p[i][j];
            if (edge > 0.0 && !seen[j]) {
                seen[j] = 1;
                queue.push_back(j);
            }
        }
    }
    return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

} // namespace

void MarkovSource::validate() const {
    std::size_t m = transition.size();
    if (m < 1) throw std::invalid_argument("chain needs at least one state");
    for (const auto& row : transition)
        check_distribution(row, m, "transition row");
    check_distribution(initial, m, "initial distribution");
    if (!reaches_all(transition, false) || !reaches_all(transition, true))
        throw std::invalid_argument("chain is reducible");
}

std::vector<double> stationary_distribution(const MarkovSource& src) {
    src.validate();
    const std::size_t m = src.transition.size();
    if (m == 1) return {1.0};

    // pi (P - I) = 0 with the last equation replaced by sum(pi) = 1
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            a[j][i] = src.transition[i][j] - (i == j ? 1.0 : 0.0);
    }
    for (std::size_t i = 0; i < m; ++i) a[m - 1][i] = 1.0;
    a[m - 1][m] = 1.0;

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        if (std::fabs(a[col][col]) < 1e-14)
            throw std::runtime_error("stationary solve is singular");
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<double> pi(m);
    for (std::size_t i = 0; i < m; ++i) pi[i] = a[i][m] / a[i][i];
    return pi;
}

double markov_entropy_rate(const MarkovSource& src) {
    std::vector<double> pi = stationary_distribution(src);
    double h = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (double p : src.transition[i])
            if (p > 0.0) h -= pi[i] * p * std::log2(p);
    }
    return h;
}

namespace {

std::size_t draw(SplitMix64& rng, const std::vector<double>& probs) {
    double u = rng.next_double();
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < probs.size(); ++j) {
        acc += probs[j];
        if (u < acc) return j;
    }
    return probs.size() - 1;
}

} // namespace

AepStats aep_deviation(const MarkovSource& src, std::size_t length,
                       std::uint64_t trials, std::uint64_t seed) {
    src.validate();
    if (length < 1) throw std::invalid_argument("sequence length must be at least 1");
    if (trials < 1) throw std::invalid_argument("need at least 1 trial");

    std::vector<double> losses(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = SplitMix64::stream(seed, t);
        std::size_t state = draw(rng, src.initial);
        double bits = -std::log2(src.initial[state]);
        for (std::size_t k = 1; k < length; ++k) {
            std::size_t next = draw(rng, src.transition[state]);
            bits -= std::log2(src.transition[state][next]);
            state = next;
        }
        losses[t] = bits / static_cast<double>(length);
    }

    AepStats stats;
    for (double v : losses) stats.mean += v;
    stats.mean /= static_cast<double>(trials);
    if (trials > 1) {
        double ss = 0.0;
        for (double v : losses) ss += (v - stats.mean) * (v - stats.mean);
        stats.deviation = std::sqrt(ss / static_cast<double>(trials - 1));
    }
    return stats;
}

std::string generate_text(const MarkovSource& src, const Alphabet& alphabet,
                          std::size_t length, std::uint64_t seed) {
    src.validate();
    if (src.states() != alphabet.size())
        throw std::invalid_argument("chain states do not match the alphabet");
    std::string out;
    out.reserve(length);
    SplitMix64 rng(SplitMix64::mix64(seed));
    std::size_t state = 0;
    for (std::size_t k = 0; k < length; ++k) {
        state = k == 0 ? draw(rng, src.initial) : draw(rng, src.transition[state]);
        out += alphabet.symbol(state);
    }
    return out;
}

const std::vector<PresetEstimate>& preset_estimates() {
    static const std::vector<PresetEstimate> table = {
        {"shannon-guessing", "n-gram frequencies and letter-guessing experiments",
         0.6, 1.3, false, "Shannon, 1951"},
        {"cover-king-gambling", "sequential betting on the next character", 1.29,
         1.9, false, "Cover and King, 1978"},
        {"guessing-replication", "large-scale replication of the guessing experiment",
         1.22, 1.22, false, "2019"},
        {"compression-range", "compression-based statistical estimators", 0.92,
         2.15, false, "spread across different texts"},
        {"ppm-extrapolation", "PPM compression followed by extrapolation", 1.13,
         1.13, false, ""},
        {"hutter-prize-file", "lossless compression contest record", 0.887, 0.887,
         false, "bits per byte of one mixed-format file, not plain running text"},
        {"default", "working estimate behind the educated-monkey rule", 0.863,
         0.863, true, ""},
    };
    return table;
}

} // namespace monkey
