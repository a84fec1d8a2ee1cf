#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcshms/rng.hpp"

namespace mcshms {

/// Gamma function for z > 0 (Lanczos, g = 7, n = 9; reflection below 0.5).
/// Throws std::domain_error for z <= 0 or non-finite z.
double gamma_fn(double z);

/// Mantegna scale for the numerator normal:
/// (Γ(1+β)·sin(πβ/2) / (Γ((1+β)/2)·β·2^((β−1)/2)))^(1/β).
/// Throws std::domain_error unless 0 < beta < 2.
double sigma_u(double beta);

struct LevyParams {
    double beta;
    double sigma_u;
    double sigma_v = 1.0;

    static LevyParams for_beta(double beta);
};

struct BetaRange {
    double low = 0.3;
    double high = 1.99;
};

/// One numerator/denominator pair: u ~ N(0, σ_u²), v ~ N(0, 1), with v
/// redrawn while |v| < 1e-300.
struct MantegnaDraw {
    double u;
    double v;
};

MantegnaDraw draw_mantegna(RngStream& rng, const LevyParams& params);

/// Per-coordinate step 0.01·u/|v|^(1/β).
std::vector<double> levy_vector(RngStream& rng, double beta, std::size_t dim);

/// Budget-dependent factor 2 − nfe·(2/nfe_max): 2 at the start of a run and
/// 0 once the budget is spent.
double step_scale(std::int64_t nfe, std::int64_t nfe_max);

/// Mental-search displacement S = step_scale(nfe) · levy ⊙ (x − x_best).
/// β is drawn once per call, uniformly from `betas`, before any u/v draw.
std::vector<double> mental_step(std::span<const double> x, std::span<const double> x_best, std::int64_t nfe,
                                std::int64_t nfe_max, RngStream& rng, BetaRange betas);

}  // namespace mcshms
