#pragma once

#include <cstdint>

namespace probund {

// splitmix64 (Steele/Lea/Flood). The two multipliers and the golden-gamma
// increment below are the reference constants; seed derivation for trial i
// is mix64(seed, i), so suite runs are reproducible from a single seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t i)
{
    std::uint64_t s = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    return splitmix64_next(s);
}

/// Deterministic PRNG used by all instance generators.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_next(state_); }

    /// Uniform-ish draw in [0, n). Modulo bias is irrelevant at the tiny
    /// ranges used here and keeps the stream platform-independent.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace probund
