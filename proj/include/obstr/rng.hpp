#pragma once
#include <cstdint>

namespace obstr {

// SplitMix64. Chosen over std::mt19937 because the bit stream must be
// identical across platforms and standard libraries for reproducible runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0; rejection sampling keeps the map exact
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

    // uniform integer in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // derive an independent stream for a sub-task
    Rng fork(std::uint64_t tag) {
        return Rng(next_u64() ^ (tag * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
    }

private:
    std::uint64_t state_;
};

} // namespace obstr
