#ifndef CYCERT_RNG_HPP
#define CYCERT_RNG_HPP

#include <cstdint>

namespace cycert {

// splitmix64: the fixed PRNG for all seeded generation, so that a seed
// reproduces byte-identical instances on any platform or implementation.
// Update: s += 0x9E3779B97F4A7C15; z = s; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
// z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        const uint64_t limit = ~0ULL - (~0ULL % bound);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

}  // namespace cycert

#endif
