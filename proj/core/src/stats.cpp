#include "mcshms/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mcshms::stats {

void ResultTable::validate() const {
    if (values.size() != functions.size()) {
        throw std::invalid_argument("result table: row count does not match function list");
    }
    for (std::size_t f = 0; f < values.size(); ++f) {
        if (values[f].size() != algorithms.size()) {
            throw std::invalid_argument("result table: row '" + functions[f] + "' has wrong number of columns");
        }
        for (std::size_t a = 0; a < values[f].size(); ++a) {
            const double v = values[f][a];
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("result table: entry (" + functions[f] + ", " + algorithms[a] +
                                            ") must be finite and non-negative");
            }
        }
    }
}

std::size_t ResultTable::algorithm_index(std::string_view algorithm) const {
    const auto it = std::find(algorithms.begin(), algorithms.end(), algorithm);
    if (it == algorithms.end()) {
        throw std::invalid_argument("result table has no algorithm '" + std::string(algorithm) + "'");
    }
    return static_cast<std::size_t>(it - algorithms.begin());
}

std::vector<double> ResultTable::column(std::string_view algorithm) const {
    const std::size_t a = algorithm_index(algorithm);
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& row : values) out.push_back(row[a]);
    return out;
}

std::vector<double> rank_row(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size());
    for (std::size_t start = 0; start < order.size();) {
        std::size_t end = start + 1;
        while (end < order.size() && values[order[end]] == values[order[start]]) ++end;
        // positions start..end-1 hold ranks start+1..end
        const double shared = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t i = start; i < end; ++i) ranks[order[i]] = shared;
        start = end;
    }
    return ranks;
}

const AlgorithmRank& RankSummary::at(std::string_view algorithm) const {
    for (const auto& r : per_algorithm) {
        if (r.algorithm == algorithm) return r;
    }
    throw std::invalid_argument("rank summary has no algorithm '" + std::string(algorithm) + "'");
}

std::vector<std::vector<double>> rank_matrix(const ResultTable& table) {
    table.validate();
    std::vector<std::vector<double>> ranks;
    ranks.reserve(table.values.size());
    for (const auto& row : table.values) ranks.push_back(rank_row(row));
    return ranks;
}

RankSummary rank_summary(const ResultTable& table) {
    const auto ranks = rank_matrix(table);
    if (ranks.empty()) throw std::invalid_argument("rank_summary: table has no rows");

    RankSummary summary;
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
        std::vector<double> column;
        column.reserve(ranks.size());
        for (const auto& row : ranks) column.push_back(row[a]);
        const MeanStd ms = mean_std(column);
        const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
        summary.per_algorithm.push_back({table.algorithms[a], ms.mean, *lo, *hi, ms.std});
    }
    return summary;
}

PairwiseCount pairwise_compare(const ResultTable& table, std::string_view a, std::string_view b) {
    const std::size_t ia = table.algorithm_index(a);
    const std::size_t ib = table.algorithm_index(b);
    PairwiseCount count;
    for (const auto& row : table.values) {
        if (row[ia] < row[ib]) {
            ++count.better;
        } else if (row[ia] > row[ib]) {
            ++count.worse;
        } else {
            ++count.ties;
        }
    }
    return count;
}

namespace {

// P(T+ <= observed) under the null, where T+ is the sum of doubled ranks
// carrying a positive sign and each sign is an independent fair coin.
double exact_lower_tail(std::span<const long> doubled_ranks, long observed) {
    const long total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0L);
    std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
    ways[0] = 1.0;
    long reach = 0;
    for (long r : doubled_ranks) {
        reach += r;
        for (long s = reach; s >= r; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - r)];
    }
    double hits = 0.0;
    for (long s = 0; s <= std::min(observed, total); ++s) hits += ways[static_cast<std::size_t>(s)];
    return std::ldexp(hits, -static_cast<int>(doubled_ranks.size()));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y, WilcoxonMethod method) {
    if (x.size() != y.size()) throw std::invalid_argument("wilcoxon_signed_rank: samples differ in length");
    if (x.size() < 5) throw std::invalid_argument("wilcoxon_signed_rank: at least 5 pairs required");

    std::vector<double> diffs;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        if (d != 0.0) diffs.push_back(d);
    }

    WilcoxonResult result;
    result.n_effective = static_cast<int>(diffs.size());
    if (diffs.empty()) {
        result.degenerate = true;
        result.p_two_sided = 1.0;
        return result;
    }

    std::vector<double> magnitudes(diffs.size());
    std::transform(diffs.begin(), diffs.end(), magnitudes.begin(), [](double d) { return std::abs(d); });
    const auto ranks = rank_row(magnitudes);
    for (std::size_t i = 0; i < diffs.size(); ++i) (diffs[i] > 0.0 ? result.t_plus : result.t_minus) += ranks[i];
    result.statistic = std::min(result.t_plus, result.t_minus);

    const int n = result.n_effective;
    const bool exact = method == WilcoxonMethod::Exact || (method == WilcoxonMethod::Auto && n <= kWilcoxonExactMaxN);
    result.exact = exact;

    if (exact) {
        std::vector<long> doubled(ranks.size());
        std::transform(ranks.begin(), ranks.end(), doubled.begin(), [](double r) { return std::lround(2.0 * r); });
        const double tail = exact_lower_tail(doubled, std::lround(2.0 * result.statistic));
        result.p_two_sided = std::min(1.0, 2.0 * tail);
        return result;
    }

    const double nd = static_cast<double>(n);
    const double mean = nd * (nd + 1.0) / 4.0;
    double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0;
    std::vector<double> sorted = magnitudes;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i);
        variance -= (t * t * t - t) / 48.0;
        i = j;
    }
    const double deviation = std::max(0.0, std::abs(result.statistic - mean) - 0.5);
    const double z = deviation / std::sqrt(variance);
    result.p_two_sided = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return result;
}

MeanStd mean_std(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean_std: no values");
    const double n = static_cast<double>(values.size());
    // Shifted by the first value: constant input gives exactly (v, 0).
    const double shift = values.front();
    double sum = 0.0;
    for (double v : values) sum += v - shift;
    const double mean_offset = sum / n;
    if (values.size() == 1) return {shift, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - shift - mean_offset) * (v - shift - mean_offset);
    return {shift + mean_offset, std::sqrt(ss / (n - 1.0))};
}

MeanStd mean_error(std::span<const RunResult> runs) {
    if (runs.empty()) throw std::invalid_argument("mean_error: no runs");
    std::vector<double> errors;
    errors.reserve(runs.size());
    for (const auto& r : runs) errors.push_back(r.error);
    return mean_std(errors);
}

}  // namespace mcshms::stats
