#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mcshms/clustering.hpp"
#include "mcshms/core.hpp"
#include "mcshms/rng.hpp"

namespace mcshms {

/// Population and bookkeeping of a running HMS-family search. The tracker
/// holds the best bid found so far and the evaluation count.
struct HmsState {
    std::vector<Bid> population;
    RunTracker tracker;
    std::int64_t iteration = 0;

    const Bid& best() const { return tracker.best(); }
    std::int64_t nfe() const { return tracker.nfe(); }
    std::vector<Point> positions() const;
    std::vector<double> values() const;
};

/// Outcome of a grouping step: the promising cluster and its movement target.
struct Grouping {
    int promising_cluster = 0;
    std::size_t target_index = 0;
    Bid target;
    ClusterAssignment assignment;
};

/// Called once per iteration after grouping and before movement.
struct IterationView {
    std::int64_t iteration;
    const HmsState& state;
    const Grouping& grouping;
};
using IterationObserver = std::function<void(const IterationView&)>;

using GroupingStrategy = std::function<Grouping(const HmsState&, const RunConfig&, RngStream&)>;

/// Uniform random population over the objective's box; every bid is evaluated
/// (counted). Validates `cfg` first.
HmsState initialize_population(const Objective& objective, const RunConfig& cfg, RngStream& rng);

/// For each bid: draw q in [q_min, q_max], evaluate q clamped candidates
/// x + S and keep the best one if it beats the bid. Stops as soon as the
/// budget is spent.
void mental_search_phase(HmsState& state, const RunConfig& cfg, const Objective& objective, RngStream& rng);

/// Standard HMS grouping: full k-means, winner = lowest mean value, target =
/// lowest-value member of the winner (ties to the lowest index).
Grouping grouping_phase_hms(const HmsState& state, const RunConfig& cfg, RngStream& rng);

/// x_n + C·(r_n·W_n − x_n) for each coordinate, unclamped.
std::vector<double> move_toward(std::span<const double> x, std::span<const double> target, double C,
                                std::span<const double> r);

/// Moves every bid not listed in `exempt` toward `target` with one fresh
/// r ~ U[0,1) per coordinate, clamps and re-evaluates it. Bids are left
/// untouched once the budget is spent.
void movement_phase(HmsState& state, const Bid& target, std::span<const std::size_t> exempt, double C,
                    RngStream& rng, const Objective& objective);

/// Shared driver: initialize, then mental search → grouping → movement until
/// the budget is spent.
RunResult run_population_search(const Objective& objective, const RunConfig& cfg, RngStream& rng,
                                 const GroupingStrategy& grouping, const IterationObserver& observer = {});

RunResult run_hms(const Objective& objective, const RunConfig& cfg, RngStream& rng,
                  const IterationObserver& observer = {});

}  // namespace mcshms
