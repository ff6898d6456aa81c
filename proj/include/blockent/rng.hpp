#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

namespace blockent {

/// SplitMix64 finalizer (Steele/Lea/Flood). Used for seed expansion and
/// sub-stream key derivation so that results never depend on platform or
/// standard-library internals.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Derive a sub-stream seed from a root seed and a path of integers
/// (e.g. {trial index} or {block row, block col}). Equal inputs give equal
/// seeds on every platform; distinct paths give independent-looking streams.
inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(root + 0x9E3779B97F4A7C15ULL);
    for (std::uint64_t p : path) {
        h = mix64(h ^ (p + 0x9E3779B97F4A7C15ULL + (h << 12) + (h >> 4)));
    }
    return h;
}

/// Deterministic stream generator: xoshiro256** (Blackman & Vigna, public
/// domain), state expanded from the 64-bit seed with SplitMix64. The output
/// sequence is a pure function of the seed, identical across platforms,
/// compilers and build modes.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            word = mix64(sm);
        }
        // all-zero state is the one invalid xoshiro state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound), unbiased via rejection sampling.
    /// bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace blockent
