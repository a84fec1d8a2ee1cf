#include "mcshms/hms.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcshms/levy.hpp"

namespace mcshms {

std::vector<Point> HmsState::positions() const {
    std::vector<Point> out;
    out.reserve(population.size());
    for (const auto& bid : population) out.push_back(bid.position);
    return out;
}

std::vector<double> HmsState::values() const {
    std::vector<double> out;
    out.reserve(population.size());
    for (const auto& bid : population) out.push_back(bid.value);
    return out;
}

HmsState initialize_population(const Objective& objective, const RunConfig& cfg, RngStream& rng) {
    cfg.validate();
    HmsState state{{}, RunTracker(objective, cfg.nfe_max), 0};
    state.population.reserve(static_cast<std::size_t>(cfg.pop_size));
    const auto lo = objective.lower();
    const auto hi = objective.upper();
    for (std::int64_t i = 0; i < cfg.pop_size; ++i) {
        Bid bid;
        bid.position.resize(objective.dim());
        for (std::size_t j = 0; j < objective.dim(); ++j) bid.position[j] = rng.uniform(lo[j], hi[j]);
        bid.value = state.tracker.evaluate(bid.position);
        state.population.push_back(std::move(bid));
    }
    return state;
}

void mental_search_phase(HmsState& state, const RunConfig& cfg, const Objective& objective, RngStream& rng) {
    const BetaRange betas{cfg.beta_low, cfg.beta_high};
    for (auto& bid : state.population) {
        if (state.tracker.exhausted()) return;
        const auto q = rng.uniform_int(cfg.q_min, cfg.q_max);
        Bid best_candidate;
        bool have_candidate = false;
        for (std::int64_t c = 0; c < q && !state.tracker.exhausted(); ++c) {
            const auto step =
                mental_step(bid.position, state.best().position, state.nfe(), state.tracker.nfe_max(), rng, betas);
            std::vector<double> candidate(bid.position);
            for (std::size_t j = 0; j < candidate.size(); ++j) candidate[j] += step[j];
            clamp_in_place(candidate, objective);
            const double value = state.tracker.evaluate(candidate);
            if (!have_candidate || value < best_candidate.value) {
                best_candidate.position = std::move(candidate);
                best_candidate.value = value;
                have_candidate = true;
            }
        }
        if (have_candidate && best_candidate.value < bid.value) bid = std::move(best_candidate);
    }
}

Grouping grouping_phase_hms(const HmsState& state, const RunConfig& cfg, RngStream& rng) {
    const auto points = state.positions();
    Grouping g;
    g.assignment = full_kmeans(points, cfg.k_clusters, rng);
    const auto means = cluster_mean_values(g.assignment, state.values());
    g.promising_cluster = static_cast<int>(std::min_element(means.begin(), means.end()) - means.begin());

    bool found = false;
    for (std::size_t i = 0; i < state.population.size(); ++i) {
        if (g.assignment.labels[i] != g.promising_cluster) continue;
        if (!found || state.population[i].value < state.population[g.target_index].value) {
            g.target_index = i;
            found = true;
        }
    }
    g.target = state.population[g.target_index];
    return g;
}

std::vector<double> move_toward(std::span<const double> x, std::span<const double> target, double C,
                                std::span<const double> r) {
    if (x.size() != target.size() || x.size() != r.size()) {
        throw std::invalid_argument("move_toward: dimension mismatch");
    }
    std::vector<double> out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) out[n] = x[n] + C * (r[n] * target[n] - x[n]);
    return out;
}

void movement_phase(HmsState& state, const Bid& target, std::span<const std::size_t> exempt, double C,
                    RngStream& rng, const Objective& objective) {
    std::vector<bool> stays(state.population.size(), false);
    for (auto i : exempt) stays.at(i) = true;

    std::vector<double> r(objective.dim());
    for (std::size_t i = 0; i < state.population.size(); ++i) {
        if (stays[i]) continue;
        if (state.tracker.exhausted()) return;
        for (auto& ri : r) ri = rng.uniform();
        Bid& bid = state.population[i];
        bid.position = move_toward(bid.position, target.position, C, r);
        clamp_in_place(bid.position, objective);
        bid.value = state.tracker.evaluate(bid.position);
    }
}

RunResult run_population_search(const Objective& objective, const RunConfig& cfg, RngStream& rng,
                                 const GroupingStrategy& grouping, const IterationObserver& observer) {
    HmsState state = initialize_population(objective, cfg, rng);
    while (!state.tracker.exhausted()) {
        mental_search_phase(state, cfg, objective, rng);
        if (state.tracker.exhausted()) break;
        const Grouping g = grouping(state, cfg, rng);
        if (observer) observer(IterationView{state.iteration, state, g});
        const auto exempt = g.assignment.members(g.promising_cluster);
        movement_phase(state, g.target, exempt, cfg.C, rng, objective);
        ++state.iteration;
    }
    return state.tracker.result();
}

RunResult run_hms(const Objective& objective, const RunConfig& cfg, RngStream& rng, const IterationObserver& observer) {
    return run_population_search(objective, cfg, rng, grouping_phase_hms, observer);
}

}  // namespace mcshms
