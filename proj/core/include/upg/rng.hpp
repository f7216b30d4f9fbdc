#pragma once

#include <cstdint>

namespace upg {

// SplitMix64. All seeded randomness in the workbench flows through this
// generator; bounded draws use plain modulo. Both facts are part of the
// reproducibility contract: a sweep seeded the same way must produce the
// same bytes on any platform or reimplementation.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); bound must be positive.
    uint64_t below(uint64_t bound) { return next() % bound; }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

    // True with probability permille/1000. Integer-only on purpose.
    bool permille(int p) { return below(1000) < static_cast<uint64_t>(p); }

private:
    uint64_t state_;
};

}  // namespace upg
