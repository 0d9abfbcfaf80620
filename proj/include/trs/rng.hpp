#pragma once

#include <cstdint>
#include <vector>

namespace trs {

// SplitMix64: tiny, portable, bit-reproducible across platforms and compilers.
// Used everywhere randomness is needed so that reports replay exactly from a seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound) via rejection.
    uint64_t below(uint64_t bound) {
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // Fisher-Yates; prefix [0, take) is a uniform ordered sample without replacement.
    template <typename T>
    void partial_shuffle(std::vector<T>& v, size_t take) {
        for (size_t i = 0; i < take && i + 1 < v.size(); ++i) {
            size_t j = i + size_t(below(v.size() - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    uint64_t state_;
};

inline uint64_t mix_u64(uint64_t h, uint64_t x) {
    SplitMix64 g(h ^ (x + 0x9e3779b97f4a7c15ULL));
    return g.next();
}

// Stream-split rule: successive absorption of labels into a SplitMix64 hash chain.
// derive_seed(master, a, b, ...) is the seed of the (a, b, ...) substream.
inline uint64_t derive_seed(uint64_t master) { return master; }

template <typename... Rest>
uint64_t derive_seed(uint64_t master, uint64_t head, Rest... rest) {
    return derive_seed(mix_u64(master, head), uint64_t(rest)...);
}

} // namespace trs
