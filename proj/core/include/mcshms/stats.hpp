#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcshms/core.hpp"

namespace mcshms::stats {

/// Functions × algorithms matrix of mean errors.
struct ResultTable {
    std::vector<std::string> functions;
    std::vector<std::string> algorithms;
    std::vector<std::vector<double>> values;  // values[function][algorithm]

    /// Throws std::invalid_argument unless the table is rectangular with finite, non-negative entries.
    void validate() const;

    /// Column index of `algorithm`; throws std::invalid_argument if absent.
    std::size_t algorithm_index(std::string_view algorithm) const;

    std::vector<double> column(std::string_view algorithm) const;
};

/// Ascending ranks (1 = smallest). Exact ties share the mean of the ranks they cover.
std::vector<double> rank_row(std::span<const double> values);

struct AlgorithmRank {
    std::string algorithm;
    double avg_rank;
    double best_rank;
    double worst_rank;
    double std_dev;  // sample standard deviation (n − 1)
};

struct RankSummary {
    std::vector<AlgorithmRank> per_algorithm;  // table column order

    const AlgorithmRank& at(std::string_view algorithm) const;
};

/// Per-row ranks of a table, values[function][algorithm].
std::vector<std::vector<double>> rank_matrix(const ResultTable& table);

RankSummary rank_summary(const ResultTable& table);

struct PairwiseCount {
    int better = 0;  // functions where a's value < b's
    int worse = 0;   // functions where a's value > b's
    int ties = 0;
};

PairwiseCount pairwise_compare(const ResultTable& table, std::string_view a, std::string_view b);

enum class WilcoxonMethod { Auto, Exact, Normal };

struct WilcoxonResult {
    double statistic = 0.0;  // min(T+, T−)
    double t_plus = 0.0;     // rank sum of positive differences x − y
    double t_minus = 0.0;
    double p_two_sided = 1.0;
    int n_effective = 0;     // non-zero differences
    bool exact = false;
    bool degenerate = false; // every difference was zero
};

/// Largest effective sample size for which Auto uses the exact distribution.
inline constexpr int kWilcoxonExactMaxN = 25;

/// Two-sided signed-rank test on paired samples. Zero differences are
/// dropped; tied |d| share averaged ranks. Exact p comes from the permutation
/// distribution of the (tie-aware) signed ranks; the normal approximation
/// applies tie and continuity corrections. Throws std::invalid_argument on a
/// length mismatch or fewer than 5 pairs.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    WilcoxonMethod method = WilcoxonMethod::Auto);

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation; 0 for a single run
};

MeanStd mean_std(std::span<const double> values);

/// Mean and sample standard deviation of RunResult::error. Throws on empty input.
MeanStd mean_error(std::span<const RunResult> runs);

}  // namespace mcshms::stats
