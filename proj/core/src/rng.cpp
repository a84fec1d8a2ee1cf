#include "mcshms/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mcshms {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) noexcept : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) {
        s += kGolden;
        word = splitmix64(s);
    }
    // xoshiro must not start from the all-zero state.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = kGolden;
}

std::uint64_t RngStream::next_u64() noexcept {
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

double RngStream::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
}

__extension__ using u128 = unsigned __int128;

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == 0) return lo;
    if (span == ~0ULL) return static_cast<std::int64_t>(next_u64());
    // Lemire's multiply-and-reject.
    const std::uint64_t range = span + 1;
    u128 m = static_cast<u128>(next_u64()) * range;
    auto low = static_cast<std::uint64_t>(m);
    if (low < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (low < threshold) {
            m = static_cast<u128>(next_u64()) * range;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return lo + static_cast<std::int64_t>(static_cast<std::uint64_t>(m >> 64));
}

double RngStream::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double a = 0.0;
    double b = 0.0;
    double s = 0.0;
    do {
        a = 2.0 * uniform() - 1.0;
        b = 2.0 * uniform() - 1.0;
        s = a * a + b * b;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = b * factor;
    has_spare_ = true;
    return a * factor;
}

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t algorithm_id, std::uint64_t function_id,
                        std::uint64_t run_index) noexcept {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ splitmix64(algorithm_id + 1 * kGolden));
    h = splitmix64(h ^ splitmix64(function_id + 2 * kGolden));
    h = splitmix64(h ^ splitmix64(run_index + 3 * kGolden));
    return RngStream(h);
}

}  // namespace mcshms
