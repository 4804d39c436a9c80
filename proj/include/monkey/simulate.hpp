#pragma once

#include <cstdint>
#include <string>

#include "monkey/monkey_model.hpp"
#include "monkey/textnorm.hpp"

namespace monkey {

struct TrialSummary {
    std::uint64_t trials = 0;
    double mean = 0.0;   // first-occurrence index, pattern's last character
    double stderr_ = 0.0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::uint64_t seed = 0;

    // Single-line record for harness consumption.
    std::string to_json_line() const;
};

// Runs `trials` independent streams of the i.i.d. model until the pattern
// first occurs, counting keystrokes through its last character. Trial t draws
// from the stream derived from (seed, t), and moments accumulate in exact
// integers, so the summary is byte-identical for every worker count.
// Educated models are rejected (nothing to stream); workers <= 0 means one
// worker per hardware thread.
TrialSummary simulate_waiting(const MonkeyModel& source,
                              const NormalizedText& pattern,
                              std::uint64_t trials, std::uint64_t seed,
                              int workers = 0);

// Generation+matching rate, symbols/second, measured over roughly the given
// wall-clock duration. Zero duration means zero symbols.
double throughput_benchmark(const MonkeyModel& source, double seconds);

} // namespace monkey
