#include "monkey/suffix_array.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace monkey {

namespace {

// counting sort of sa by key[sa[i]], stable; keys in [0, classes)
void radix_pass(const std::vector<std::int32_t>& in,
                std::vector<std::int32_t>& out,
                const std::vector<std::int32_t>& key, std::int32_t classes) {
    std::vector<std::int32_t> cnt(classes + 1, 0);
    for (std::int32_t v : in) ++cnt[key[v] + 1];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::int32_t v : in) out[cnt[key[v]]++] = v;
}

} // namespace

std::vector<std::int32_t> suffix_array(const std::string& s) {
    const std::int32_t n = static_cast<std::int32_t>(s.size());
    std::vector<std::int32_t> sa(n);
    std::iota(sa.begin(), sa.end(), 0);
    if (n <= 1) return sa;

    std::vector<std::int32_t> rank(n), tmp(n), sa2(n);
    for (std::int32_t i = 0; i < n; ++i)
        rank[i] = static_cast<unsigned char>(s[i]);

    radix_pass(sa, sa2, rank, 256);
    sa.swap(sa2);
    tmp[sa[0]] = 0;
    for (std::int32_t i = 1; i < n; ++i)
        tmp[sa[i]] = tmp[sa[i - 1]] + (rank[sa[i]] != rank[sa[i - 1]] ? 1 : 0);
    rank.swap(tmp);

    for (std::int32_t k = 1; rank[sa[n - 1]] != n - 1; k <<= 1) {
        // order by the k-shifted tail first (suffixes past the end sort
        // lowest), then a stable pass on the head rank
        std::int32_t p = 0;
        for (std::int32_t i = n - k; i < n; ++i) sa2[p++] = i;
        for (std::int32_t i = 0; i < n; ++i)
            if (sa[i] >= k) sa2[p++] = sa[i] - k;
        radix_pass(sa2, sa, rank, rank[sa[n - 1]] + 1);

        tmp[sa[0]] = 0;
        for (std::int32_t i = 1; i < n; ++i) {
            std::int32_t a = sa[i - 1], b = sa[i];
            bool same = rank[a] == rank[b];
            if (same) {
                std::int32_t ra = a + k < n ? rank[a + k] : -1;
                std::int32_t rb = b + k < n ? rank[b + k] : -1;
                same = ra == rb;
            }
            tmp[b] = tmp[a] + (same ? 0 : 1);
        }
        rank.swap(tmp);
    }
    return sa;
}

std::vector<std::int32_t> lcp_array(const std::string& s,
                                    const std::vector<std::int32_t>& sa) {
    const std::int32_t n = static_cast<std::int32_t>(s.size());
    std::vector<std::int32_t> rank(n);
    for (std::int32_t i = 0; i < n; ++i) rank[sa[i]] = i;
    std::vector<std::int32_t> lcp(n, 0);
    std::int32_t h = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        std::int32_t r = rank[i];
        if (r == 0) {
            h = 0;
            continue;
        }
        std::int32_t j = sa[r - 1];
        if (h > 0) --h;
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[r] = h;
    }
    return lcp;
}

RangeMin::RangeMin(const std::vector<std::int32_t>& values) : n_(values.size()) {
    table_.push_back(values);
    for (std::size_t len = 1; len * 2 <= n_; len *= 2) {
        const auto& prev = table_.back();
        std::vector<std::int32_t> next(n_ - len * 2 + 1);
        for (std::size_t i = 0; i + len * 2 <= n_; ++i)
            next[i] = std::min(prev[i], prev[i + len]);
        table_.push_back(std::move(next));
    }
}

std::int32_t RangeMin::min(std::size_t lo, std::size_t hi) const {
    std::size_t len = hi - lo;
    std::size_t level = 0;
    while ((std::size_t{2} << level) <= len) ++level;
    std::size_t span = std::size_t{1} << level;
    return std::min(table_[level][lo], table_[level][hi - span]);
}

} // namespace monkey
