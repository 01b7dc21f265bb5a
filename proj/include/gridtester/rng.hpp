#pragma once

#include <cstdint>

namespace gridtester {

// Seeded counter-based generator: output i is a fixed 64-bit mix of
// (seed, i). Identical across platforms and insensitive to call history,
// which is what makes trial streams and CLI runs reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix(seed_, counter_++); }

    // Uniform in [0, bound) via rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(std::uint64_t(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }

    // Independent derived stream (per-trial seeds, restart substreams).
    Rng fork(std::uint64_t salt) const { return Rng(mix(seed_, mix(salt, 0x5349)) ); }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace gridtester
