#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcshms/core.hpp"

namespace mcshms::testkit {

std::filesystem::path data_dir();

/// Sum of squares on [lo, hi]^dim.
Objective sphere(std::size_t dim, double lo = -100.0, double hi = 100.0);

/// Counts every evaluation and records whether any evaluated point left the box.
struct EvalProbe {
    std::atomic<std::int64_t> calls{0};
    std::atomic<bool> out_of_bounds{false};
};

/// Copy of `inner` whose evaluations are reported to `probe`.
Objective probed(const Objective& inner, std::shared_ptr<EvalProbe> probe);

/// Two-sided exact signed-rank p by walking all 2^n sign patterns of the
/// tie-averaged ranks of |d| (zeros dropped). n ≤ 20.
double brute_force_wilcoxon_p(std::span<const double> diffs);

// Property checks. Each returns an empty optional on success or a message
// describing the first violation for the given seed.
std::optional<std::string> check_assignment_optimality(std::uint64_t seed);
std::optional<std::string> check_rank_row_sum(std::uint64_t seed);
std::optional<std::string> check_monotone_best(std::uint64_t seed);
std::optional<std::string> check_nfe_accounting(std::uint64_t seed);
std::optional<std::string> check_bounds_preservation(std::uint64_t seed);

inline constexpr int kPropertySeeds = 1000;

}  // namespace mcshms::testkit
