#include "mcshms/mcs.hpp"

#include <stdexcept>

namespace mcshms {

ClusterMemory build_memory(const ClusterAssignment& assignment, std::span<const Bid> population) {
    if (assignment.labels.size() != population.size()) {
        throw std::invalid_argument("build_memory: assignment does not match population size");
    }
    constexpr auto kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> best(static_cast<std::size_t>(assignment.k), kNone);
    for (std::size_t i = 0; i < population.size(); ++i) {
        auto& slot = best.at(static_cast<std::size_t>(assignment.labels[i]));
        if (slot == kNone || population[i].value < population[slot].value) slot = i;
    }

    ClusterMemory memory;
    for (std::size_t c = 0; c < best.size(); ++c) {
        if (best[c] == kNone) continue;
        memory.entries.push_back({static_cast<int>(c), best[c], population[best[c]]});
    }
    return memory;
}

const MemoryEntry& select_target(const ClusterMemory& memory, RngStream& rng) {
    if (memory.empty()) throw std::invalid_argument("select_target: memory is empty");
    const auto pick = rng.uniform_int(0, static_cast<std::int64_t>(memory.size()) - 1);
    return memory.entries[static_cast<std::size_t>(pick)];
}

Grouping grouping_phase_mcs(const HmsState& state, const RunConfig& cfg, RngStream& rng) {
    Grouping g;
    g.assignment = one_step_kmeans(state.positions(), cfg.k_clusters, rng);
    const ClusterMemory memory = build_memory(g.assignment, state.population);
    const MemoryEntry& chosen = select_target(memory, rng);
    g.promising_cluster = chosen.cluster;
    g.target_index = chosen.index;
    g.target = chosen.bid;
    return g;
}

RunResult run_mcs_hms(const Objective& objective, const RunConfig& cfg, RngStream& rng,
                      const IterationObserver& observer) {
    return run_population_search(objective, cfg, rng, grouping_phase_mcs, observer);
}

}  // namespace mcshms
