#pragma once

#include <span>
#include <vector>

#include "mcshms/clustering.hpp"
#include "mcshms/core.hpp"
#include "mcshms/hms.hpp"
#include "mcshms/rng.hpp"

namespace mcshms {

struct MemoryEntry {
    int cluster;
    std::size_t index;  // position of the bid in the population
    Bid bid;
};

/// Best bid of every cluster in the current grouping, ordered by cluster id.
/// Rebuilt from scratch each iteration.
struct ClusterMemory {
    std::vector<MemoryEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
};

/// One entry per non-empty cluster holding its lowest-value bid (ties go to
/// the lowest population index).
ClusterMemory build_memory(const ClusterAssignment& assignment, std::span<const Bid> population);

/// Uniform choice over the memory. Throws std::invalid_argument if it is empty.
const MemoryEntry& select_target(const ClusterMemory& memory, RngStream& rng);

/// Multi-cluster selection grouping: one-step k-means, then a target drawn
/// uniformly from the per-cluster bests.
Grouping grouping_phase_mcs(const HmsState& state, const RunConfig& cfg, RngStream& rng);

RunResult run_mcs_hms(const Objective& objective, const RunConfig& cfg, RngStream& rng,
                      const IterationObserver& observer = {});

}  // namespace mcshms
