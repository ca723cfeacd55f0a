#pragma once

#include <cstdint>
#include <random>

namespace lotvns {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of the stream owned by (worker, round) under a base seed. Streams
/// depend only on these three values, never on scheduling.
constexpr std::uint64_t stream_seed(std::uint64_t base, std::uint64_t worker,
                                    std::uint64_t round) noexcept {
    return base ^ mix64(mix64(worker) ^ (round * 0xD1B54A32D192ED03ULL));
}

/// mt19937_64 engine with portable bounded draws. The standard
/// distributions are implementation defined, so integer draws use
/// rejection sampling on the raw engine output instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform in [lo, hi], inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        return lo + static_cast<std::int64_t>(below(span));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace lotvns
