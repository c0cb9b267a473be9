#pragma once

#include <cstdint>

namespace bollobas {

// SplitMix64 stream. Every randomized routine takes a master seed and derives
// one child stream per logical task, so results are reproducible no matter
// how the work is scheduled.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via rejection.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

private:
    uint64_t state_;
};

inline SplitMix64 derive_stream(uint64_t master, uint64_t index) {
    SplitMix64 mixer(master ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return SplitMix64(mixer.next());
}

}  // namespace bollobas
