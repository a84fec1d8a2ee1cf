#include "mcshms/pso.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mcshms {

void PsoConfig::validate() const {
    if (pop_size < 1) throw ConfigError("pso: pop_size must be positive");
    if (nfe_max < pop_size) throw ConfigError("pso: nfe_max must cover the initial swarm (nfe_max >= pop_size)");
    if (!std::isfinite(w_start) || !std::isfinite(w_end)) throw ConfigError("pso: inertia bounds must be finite");
    if (!(c1 >= 0.0) || !(c2 >= 0.0)) throw ConfigError("pso: acceleration constants must be non-negative");
    if (!(v_max_fraction > 0.0)) throw ConfigError("pso: v_max_fraction must be positive");
}

double pso_inertia(const PsoConfig& cfg, std::int64_t nfe) {
    const double t = static_cast<double>(std::clamp<std::int64_t>(nfe, 0, cfg.nfe_max)) /
                     static_cast<double>(cfg.nfe_max);
    return cfg.w_start + (cfg.w_end - cfg.w_start) * t;
}

RunResult run_pso(const Objective& objective, const PsoConfig& cfg, RngStream& rng) {
    cfg.validate();
    const std::size_t dim = objective.dim();
    const auto n = static_cast<std::size_t>(cfg.pop_size);
    const auto lo = objective.lower();
    const auto hi = objective.upper();

    std::vector<double> v_max(dim);
    for (std::size_t j = 0; j < dim; ++j) v_max[j] = cfg.v_max_fraction * (hi[j] - lo[j]);

    RunTracker tracker(objective, cfg.nfe_max);
    std::vector<std::vector<double>> x(n, std::vector<double>(dim));
    std::vector<std::vector<double>> v(n, std::vector<double>(dim));
    std::vector<Bid> pbest(n);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            x[i][j] = rng.uniform(lo[j], hi[j]);
            v[i][j] = rng.uniform(-v_max[j], v_max[j]);
        }
        pbest[i] = Bid{x[i], tracker.evaluate(x[i])};
    }

    while (!tracker.exhausted()) {
        for (std::size_t i = 0; i < n && !tracker.exhausted(); ++i) {
            const double w = pso_inertia(cfg, tracker.nfe());
            const auto& gbest = tracker.best().position;
            for (std::size_t j = 0; j < dim; ++j) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                double vel = w * v[i][j] + cfg.c1 * r1 * (pbest[i].position[j] - x[i][j]) +
                             cfg.c2 * r2 * (gbest[j] - x[i][j]);
                v[i][j] = std::clamp(vel, -v_max[j], v_max[j]);
                x[i][j] = std::clamp(x[i][j] + v[i][j], lo[j], hi[j]);
            }
            const double value = tracker.evaluate(x[i]);
            if (value < pbest[i].value) pbest[i] = Bid{x[i], value};
        }
    }
    return tracker.result();
}

}  // namespace mcshms
