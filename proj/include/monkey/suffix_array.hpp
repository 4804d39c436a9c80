#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monkey {

// Suffix array over a byte string: sa[k] is the start of the k-th smallest
// suffix. Doubling with radix sort, O(n log n).
std::vector<std::int32_t> suffix_array(const std::string& s);

// Kasai: lcp[k] = longest common prefix of the suffixes ranked k and k-1
// (lcp[0] = 0).
std::vector<std::int32_t> lcp_array(const std::string& s,
                                    const std::vector<std::int32_t>& sa);

// Idempotent min over ranges of a fixed array, O(1) query after O(n log n)
// build.
class RangeMin {
public:
    explicit RangeMin(const std::vector<std::int32_t>& values);
    // min over [lo, hi), lo < hi
    std::int32_t min(std::size_t lo, std::size_t hi) const;

private:
    std::size_t n_;
    std::vector<std::vector<std::int32_t>> table_;
};

} // namespace monkey
