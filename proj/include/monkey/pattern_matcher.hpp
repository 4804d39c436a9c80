#pragma once

#include <cstdint>
#include <vector>

#include "monkey/textnorm.hpp"

namespace monkey {

// Failure function (border array): failure[j] = length of the longest proper
// border of the length-j prefix. failure[j] < j for j >= 1.
std::vector<int> failure_function(const std::string& pattern);

// All j such that the length-j prefix equals the length-j suffix, ascending;
// the full length is always included. These are the fixed points of the
// failure-function chain from l.
std::vector<int> borders(const NormalizedText& pattern);

// Streaming first-occurrence automaton over alphabet indices. State s means
// "the last s symbols fed equal the first s pattern characters (maximally)";
// feeding the pattern itself from state 0 accepts on exactly the l-th symbol.
class PatternMatcher {
public:
    PatternMatcher(const NormalizedText& pattern);

    int length() const { return length_; }
    int state() const { return state_; }
    void reset() { state_ = 0; }

    // Feed one symbol index; true once the full pattern has just appeared.
    bool feed(int symbol_index) {
        state_ = table_[static_cast<std::size_t>(state_) * m_ +
                        static_cast<std::size_t>(symbol_index)];
        return state_ == length_;
    }

    const std::vector<int>& failure() const { return failure_; }

private:
    int m_;
    int length_;
    int state_ = 0;
    std::vector<int> failure_;
    // (l+1) x m next-state table; row l loops back as if the match continued,
    // but callers stop at the first acceptance so that row is never hot.
    std::vector<std::uint16_t> table_;
};

} // namespace monkey
