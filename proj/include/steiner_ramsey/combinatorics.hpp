#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace steiner_ramsey {

/// Binomial coefficient, saturating at the uint64 maximum.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

/// Saturating integer power.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

/// Visits every k-subset of `items` in lexicographic position order. The
/// visitor returns false to stop early; the function then returns false.
template <typename T, typename Visitor>
bool for_each_subset(std::span<const T> items, std::size_t k, Visitor&& visit) {
    const std::size_t n = items.size();
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<T> buf(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) buf[i] = items[idx[i]];
        if (!visit(std::span<const T>(buf))) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Intersection size of two sorted ranges.
template <typename T>
std::size_t intersection_size(std::span<const T> a, std::span<const T> b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

/// True iff sorted range `a` is a subset of sorted range `b`.
template <typename T>
bool is_sorted_subset(std::span<const T> a, std::span<const T> b) {
    return intersection_size(a, b) == a.size();
}

} // namespace steiner_ramsey
