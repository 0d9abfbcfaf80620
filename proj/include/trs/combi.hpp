#pragma once

#include <vector>

namespace trs {

// idx = first k-subset of {0,...,n-1} in lexicographic order
inline std::vector<int> first_k_subset(int k) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
    return idx;
}

// Advance to the next k-subset; false once exhausted.
inline bool next_k_subset(std::vector<int>& idx, int n) {
    int k = int(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[size_t(i)] < n - k + i) {
            ++idx[size_t(i)];
            for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace trs
