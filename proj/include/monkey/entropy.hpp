#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monkey/textnorm.hpp"

namespace monkey {

struct EntropyEstimate {
    double value = 0.0;          // bits per character, in [0, log2 m]
    std::string method;          // "ngram" or "matchlen"
    std::uint64_t parameter = 0; // n or window size
    std::uint64_t sample_size = 0;
};

struct NGramStats {
    int order = 0;
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
};

// Counts length-n blocks over sliding windows of text[begin, end); merging
// two disjoint ranges' stats gives the whole range's stats, so partitioned
// counting is exact.
NGramStats count_ngrams(const NormalizedText& text, int n, std::size_t begin,
                        std::size_t end);
void merge_ngrams(NGramStats& into, const NGramStats& from);

// Empirical block entropy of the counted blocks, bits; 0 log 0 = 0.
double block_entropy(const NGramStats& stats);

// H_n - H_{n-1} (H_0 = 0) from sliding-window block counts: the plug-in
// conditional entropy of the next character given n-1 of history. Partitioned
// across `workers` and merged; the result does not depend on the partition.
EntropyEstimate ngram_conditional_entropy(const NormalizedText& text, int n,
                                          int workers = 1);

// Fixed-window match-length estimator: for each i in [W, n), Lambda_i =
// 1 + longest match (capped at W) between the text starting at i and the text
// starting anywhere in [i-W, i); returns log2(W) / mean(Lambda). Needs
// n >= 2W. Exact computation via suffix array + LCP + windowed rank
// neighbors, O(n log n).
EntropyEstimate match_length_entropy(const NormalizedText& text,
                                     std::uint32_t window);

// Finite-state stationary source over symbol indices 0..m-1.
struct MarkovSource {
    std::vector<std::vector<double>> transition; // rows sum to 1
    std::vector<double> initial;

    static MarkovSource iid(std::vector<double> probs);
    int states() const { return static_cast<int>(transition.size()); }
    void validate() const; // shape, stochasticity, irreducibility
};

// Stationary distribution by linear solve (one equation replaced by the
// normalization); rejects reducible chains.
std::vector<double> stationary_distribution(const MarkovSource& src);

// h = -sum_i pi_i sum_j P_ij log2 P_ij, bits per character.
double markov_entropy_rate(const MarkovSource& src);

struct AepStats {
    double mean = 0.0;      // per-character log-loss, bits
    double deviation = 0.0; // sample standard deviation across trials
};

// Draws `trials` length-l sequences and measures -(1/l) log2 P(sequence).
// Concentration: mean -> h and deviation -> 0 as l grows.
AepStats aep_deviation(const MarkovSource& src, std::size_t length,
                       std::uint64_t trials, std::uint64_t seed);

// Deterministic synthetic text from the source, for estimator tests.
std::string generate_text(const MarkovSource& src, const Alphabet& alphabet,
                          std::size_t length, std::uint64_t seed);

struct PresetEstimate {
    std::string name;
    std::string method;
    double low = 0.0;  // low == high for point estimates
    double high = 0.0;
    bool is_default = false;
    std::string note;
};

// Published entropy-rate estimates for English, plus the deployed default
// (0.863 bpc) that the rounded rule is calibrated to.
const std::vector<PresetEstimate>& preset_estimates();

} // namespace monkey
