#pragma once

#include <array>
#include <cstdint>

namespace mcshms {

/// SplitMix64 finalizer (Steele, Lea & Flood). Used for seeding and stream
/// derivation.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic random stream: xoshiro256** seeded through SplitMix64.
///
/// Every draw is computed with fixed integer arithmetic and the polar normal
/// method, so a given seed yields the same sequence on every platform with
/// IEEE-754 doubles. Streams are plain values; copying one forks an identical
/// future sequence.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept;

    /// Uniform integer in [lo, hi] (inclusive, unbiased). A single-value range
    /// returns lo without consuming any state.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Standard normal draw (Marsaglia polar method; the second variate of
    /// each accepted pair is cached).
    double normal() noexcept;

    friend bool operator==(const RngStream&, const RngStream&) = default;

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Derives an independent stream for one (algorithm, function, run) cell of
/// an experiment by hashing the tuple into a 64-bit seed.
RngStream derive_stream(std::uint64_t master_seed, std::uint64_t algorithm_id, std::uint64_t function_id,
                        std::uint64_t run_index) noexcept;

}  // namespace mcshms
