#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcshms/core.hpp"
#include "mcshms/rng.hpp"

namespace mcshms::functions {

/// Static description of a classical base function. Every base function has
/// global minimum 0 at the point with all coordinates equal to `optimum_coord`.
struct BaseInfo {
    std::string_view name;
    double lower;
    double upper;
    double optimum_coord;
    bool multimodal;
};

/// sphere, rosenbrock, rastrigin, ackley, griewank, zakharov, schwefel_2_26,
/// levy_fn, bent_cigar, sum_diff_powers, in suite order.
std::span<const BaseInfo> base_functions();

/// Throws std::invalid_argument for an unknown name.
const BaseInfo& base_info(std::string_view name);

/// Textbook value of the named base function. Throws std::invalid_argument
/// for an unknown name or an empty x.
double base_function(std::string_view name, std::span<const double> x);

/// Untransformed base function on its canonical box as an Objective.
Objective base_objective(std::string_view name, std::size_t dim);

/// Row-major square matrix.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    static SquareMatrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

    /// Largest |(M·Mᵀ − I)_ij|.
    double orthogonality_error() const;
};

/// Orthogonal matrix from modified Gram–Schmidt applied to standard normal
/// draws (rows are orthonormalized in order).
SquareMatrix random_rotation(std::size_t dim, RngStream& rng);

/// eval(x) = base(R·(x − shift) + optimum_coord·1) + bias on the base
/// function's canonical box. The optimum sits at `shift` with value `bias`.
Objective make_transformed(std::string_view base, std::vector<double> shift, SquareMatrix rotation, double bias,
                           std::string name = {});

/// Dimensions accepted by make_suite.
std::span<const std::size_t> supported_dims();

/// Names of available suites ("classic10").
std::vector<std::string> suite_names();

/// Deterministic benchmark suite. For "classic10" every base function is
/// shifted uniformly inside the central 80% of its box, the multimodal ones
/// are also rotated, and member i carries bias 100·(i+1).
std::vector<Objective> make_suite(std::string_view name, std::size_t dim, std::uint64_t seed);

}  // namespace mcshms::functions
