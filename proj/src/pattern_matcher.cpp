#include "monkey/pattern_matcher.hpp"

#include <algorithm>
#include <stdexcept>

namespace monkey {

std::vector<int> failure_function(const std::string& pattern) {
    const int l = static_cast<int>(pattern.size());
    std::vector<int> fail(static_cast<std::size_t>(l) + 1, 0);
    int k = 0;
    for (int j = 1; j < l; ++j) {
        while (k > 0 && pattern[static_cast<std::size_t>(j)] !=
                            pattern[static_cast<std::size_t>(k)])
            k = fail[static_cast<std::size_t>(k)];
        if (pattern[static_cast<std::size_t>(j)] ==
            pattern[static_cast<std::size_t>(k)])
            ++k;
        fail[static_cast<std::size_t>(j) + 1] = k;
    }
    return fail;
}

std::vector<int> borders(const NormalizedText& pattern) {
    if (pattern.length() == 0)
        throw std::invalid_argument("pattern must be nonempty");
    auto fail = failure_function(pattern.content());
    std::vector<int> out;
    for (int j = static_cast<int>(pattern.length()); j > 0;
         j = fail[static_cast<std::size_t>(j)])
        out.push_back(j);
    std::reverse(out.begin(), out.end());
    return out;
}

PatternMatcher::PatternMatcher(const NormalizedText& pattern)
    : m_(pattern.alphabet().size()),
      length_(static_cast<int>(pattern.length())) {
    if (length_ == 0) throw std::invalid_argument("pattern must be nonempty");
    if (length_ >= 65535)
        throw std::invalid_argument("pattern too long for the state table");
    failure_ = failure_function(pattern.content());

    const auto& alpha = pattern.alphabet();
    const std::string& p = pattern.content();
    table_.assign(static_cast<std::size_t>(length_ + 1) *
                      static_cast<std::size_t>(m_),
                  0);
    for (int s = 0; s <= length_; ++s) {
        for (int c = 0; c < m_; ++c) {
            int next;
            if (s < length_ &&
                alpha.symbol(c) == p[static_cast<std::size_t>(s)]) {
                next = s + 1;
            } else if (s == 0) {
                next = 0;
            } else {
                // longest border that still extends by c; already computed
                next = table_[static_cast<std::size_t>(
                                  failure_[static_cast<std::size_t>(s)]) *
                                  static_cast<std::size_t>(m_) +
                              static_cast<std::size_t>(c)];
            }
            table_[static_cast<std::size_t>(s) * static_cast<std::size_t>(m_) +
                   static_cast<std::size_t>(c)] =
                static_cast<std::uint16_t>(next);
        }
    }
}

} // namespace monkey
