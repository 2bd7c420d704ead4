#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cofill {

/// Largest bit-vector we are willing to allocate: C(n,r) above this is refused.
inline constexpr std::uint64_t kMaxRanks = 1ull << 33;

/// C(n,k) without overflow for the sizes we handle; throws if the value
/// exceeds kMaxRanks^2 head-room (values that large never occur in-range).
inline std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > (static_cast<unsigned __int128>(kMaxRanks) << 20))
            throw std::overflow_error("binom: value out of supported range");
    }
    return static_cast<std::uint64_t>(r);
}

/// Colexicographic rank of an r-subset of [n] (labels 1..n, sorted ascending):
/// rank(S) = sum_i C(S[i]-1, i+1).
inline std::uint64_t subset_rank(const std::vector<int>& s, int n) {
    std::uint64_t r = 0;
    int prev = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= prev || s[i] > n) throw std::invalid_argument("subset_rank: not a sorted subset of [n]");
        prev = s[i];
        r += binom(s[i] - 1, static_cast<int>(i) + 1);
    }
    return r;
}

/// Inverse of subset_rank: the r-subset of [n] with the given colex rank.
inline std::vector<int> subset_unrank(std::uint64_t k, int r, int n) {
    if (k >= binom(n, r)) throw std::out_of_range("subset_unrank: rank out of range");
    std::vector<int> s(r);
    int hi = n;
    for (int i = r; i >= 1; --i) {
        int m = i - 1;
        while (m < hi && binom(m + 1, i) <= k) ++m;
        s[i - 1] = m + 1;
        k -= binom(m, i);
        hi = m;
    }
    return s;
}

}  // namespace cofill
