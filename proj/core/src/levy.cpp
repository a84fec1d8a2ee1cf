#include "mcshms/levy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcshms {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double z) {
    if (z < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    double series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    // t^(z+0.5) split in two halves so large z does not overflow before exp(-t).
    const double half_power = std::pow(t, (z + 0.5) / 2.0);
    return std::sqrt(2.0 * std::numbers::pi) * half_power * std::exp(-t) * half_power * series;
}

void check_beta(double beta) {
    if (!(beta > 0.0 && beta < 2.0)) {
        throw std::domain_error("Levy exponent beta must lie in (0, 2), got " + std::to_string(beta));
    }
}

}  // namespace

double gamma_fn(double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw std::domain_error("gamma_fn: argument must be positive and finite, got " + std::to_string(z));
    }
    // Exact factorials where they are representable.
    if (z == std::floor(z) && z <= 23.0) {
        double f = 1.0;
        for (int i = 2; i < static_cast<int>(z); ++i) f *= i;
        return f;
    }
    return lanczos_gamma(z);
}

double sigma_u(double beta) {
    check_beta(beta);
    const double numerator = gamma_fn(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double denominator = gamma_fn((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(numerator / denominator, 1.0 / beta);
}

LevyParams LevyParams::for_beta(double beta) {
    return LevyParams{beta, mcshms::sigma_u(beta), 1.0};
}

MantegnaDraw draw_mantegna(RngStream& rng, const LevyParams& params) {
    const double u = params.sigma_u * rng.normal();
    double v = params.sigma_v * rng.normal();
    while (std::abs(v) < 1e-300) v = params.sigma_v * rng.normal();
    return {u, v};
}

std::vector<double> levy_vector(RngStream& rng, double beta, std::size_t dim) {
    const LevyParams params = LevyParams::for_beta(beta);
    const double inv_beta = 1.0 / beta;
    std::vector<double> step(dim);
    for (auto& s : step) {
        const auto [u, v] = draw_mantegna(rng, params);
        s = 0.01 * u / std::pow(std::abs(v), inv_beta);
    }
    return step;
}

double step_scale(std::int64_t nfe, std::int64_t nfe_max) {
    if (nfe_max <= 0) throw std::domain_error("step_scale: nfe_max must be positive");
    if (nfe < 0 || nfe > nfe_max) {
        throw std::domain_error("step_scale: nfe " + std::to_string(nfe) + " outside [0, " + std::to_string(nfe_max) +
                                "]");
    }
    return 2.0 - static_cast<double>(nfe) * (2.0 / static_cast<double>(nfe_max));
}

std::vector<double> mental_step(std::span<const double> x, std::span<const double> x_best, std::int64_t nfe,
                                std::int64_t nfe_max, RngStream& rng, BetaRange betas) {
    if (x.size() != x_best.size()) throw std::invalid_argument("mental_step: x and x_best differ in length");
    const double scale = step_scale(nfe, nfe_max);
    const double beta = rng.uniform(betas.low, betas.high);
    std::vector<double> step = levy_vector(rng, beta, x.size());
    for (std::size_t j = 0; j < step.size(); ++j) {
        const double displacement = x[j] - x_best[j];
        // A tiny |v| can overflow the Levy factor to ±inf; keep 0·inf out of the result.
        step[j] = (scale == 0.0 || displacement == 0.0) ? 0.0 : scale * step[j] * displacement;
    }
    return step;
}

}  // namespace mcshms
