#pragma once

#include <cstdint>

#include "mcshms/core.hpp"
#include "mcshms/rng.hpp"

namespace mcshms {

/// Global-best PSO settings. Inertia falls linearly from w_start to w_end
/// over the evaluation budget; c1/c2 defaults are the published constants.
struct PsoConfig {
    std::int64_t pop_size = 50;
    std::int64_t nfe_max = 100000;
    std::uint64_t seed = 0;
    double w_start = 1.0;
    double w_end = 0.0;
    double c1 = 2.0;
    double c2 = 2.0;
    double v_max_fraction = 0.2;

    void validate() const;
};

/// Inertia weight after `nfe` evaluations.
double pso_inertia(const PsoConfig& cfg, std::int64_t nfe);

RunResult run_pso(const Objective& objective, const PsoConfig& cfg, RngStream& rng);

}  // namespace mcshms
