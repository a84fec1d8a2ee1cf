#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcshms/core.hpp"
#include "mcshms/rng.hpp"
#include "mcshms/stats.hpp"

namespace mcshms::harness {

/// Algorithm identifiers understood by the runner. The position in this list
/// is the algorithm id used for stream derivation, so it must stay stable.
inline constexpr std::array<std::string_view, 3> kAlgorithms = {"hms", "mcs-hms", "pso"};

std::uint64_t algorithm_id(std::string_view algorithm);

/// Stream derivation id for function `index` of a suite at dimension `dim`.
std::uint64_t function_stream_id(std::size_t dim, std::size_t index);

struct ExperimentConfig {
    std::string suite = "classic10";
    std::vector<std::size_t> dims = {10};
    std::vector<std::string> algorithms = {"hms", "mcs-hms", "pso"};
    int runs = 25;
    std::int64_t nfe_max = 100000;
    std::uint64_t master_seed = 42;
    std::filesystem::path output_dir = "results";
    int parallelism = 1;
    std::int64_t pop_size = 50;

    /// Throws ConfigError for any invalid field, unknown algorithm or suite.
    void validate() const;
};

/// Sets one field from its textual form (`dims` and `algorithms` take
/// comma-separated lists). Throws ConfigError for unknown keys or bad values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Flat `key = value` text, one setting per line, `#` starts a comment.
ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base = {});

/// Runs one algorithm with the shared HMS-family / PSO settings.
RunResult run_algorithm(std::string_view algorithm, const Objective& objective, std::int64_t pop_size,
                        std::int64_t nfe_max, RngStream& rng);

struct RawRecord {
    std::string function;
    std::string algorithm;
    std::size_t dim = 0;
    int run = 0;
    std::uint64_t seed = 0;
    double best_error = 0.0;
    std::int64_t nfe_used = 0;
    std::int64_t wall_ms = 0;
};

struct SummaryRecord {
    std::string function;
    std::string algorithm;
    std::size_t dim = 0;
    double mean_error = 0.0;
    double std_error = 0.0;
    double rank = 0.0;
};

struct ExperimentResults {
    std::vector<RawRecord> raw;          // dim, function, algorithm, run order
    std::vector<SummaryRecord> summary;  // dim, function, algorithm order
};

inline constexpr std::string_view kRawHeader = "function,algorithm,dim,run,seed,best_error,nfe_used,wall_ms";
inline constexpr std::string_view kSummaryHeader = "function,algorithm,dim,mean_error,std_error,rank";
inline constexpr std::string_view kRankHeader = "function,algorithm,dim,rank";

/// Executes the full run matrix in memory. Output is independent of
/// `parallelism` apart from wall_ms.
ExperimentResults execute_experiment(const ExperimentConfig& config);

/// execute_experiment() followed by writing raw.csv and summary.csv into
/// config.output_dir (created if needed).
ExperimentResults run_experiment(const ExperimentConfig& config);

/// Mean/std of best_error per (dim, function, algorithm) plus the per-function rank.
std::vector<SummaryRecord> summarize(std::span<const RawRecord> raw);

void write_raw_csv(std::ostream& out, std::span<const RawRecord> rows, bool include_wall_ms = true);
void write_summary_csv(std::ostream& out, std::span<const SummaryRecord> rows);
std::vector<SummaryRecord> read_summary_csv(std::istream& in, const std::string& source);

struct RankRecord {
    std::string function;
    std::string algorithm;
    std::size_t dim = 0;
    double rank = 0.0;
};

/// Per-function ranks recomputed from mean errors. Throws std::invalid_argument
/// when a (function, dim) group lacks one of the algorithms seen elsewhere.
std::vector<RankRecord> ranks_from_summary(std::span<const SummaryRecord> summary);
std::vector<RankRecord> ranks_from_table(const stats::ResultTable& table, std::size_t dim);
void write_rank_csv(std::ostream& out, std::span<const RankRecord> rows);

/// Number of rows where `algorithm` holds exactly `rank`.
int count_rank(std::span<const RankRecord> rows, std::string_view algorithm, double rank);

// ---------------------------------------------------------------------------
// Fixture replay

enum class FixtureId { D30, D50, D100 };

FixtureId parse_fixture_id(std::string_view text);
std::string_view fixture_name(FixtureId id);
std::size_t fixture_dim(FixtureId id);

/// Subject column in the fixtures.
inline constexpr std::string_view kSubjectAlgorithm = "MCS-HMS";

std::filesystem::path default_data_dir();

stats::ResultTable load_fixture(FixtureId id, const std::filesystem::path& data_dir);

struct ReferenceRank {
    double avg_rank;
    double best_rank;
    double worst_rank;
    double std_dev;
};

struct RankComparison {
    stats::AlgorithmRank computed;
    std::optional<ReferenceRank> reference;
};

struct PairwiseComparison {
    std::string opponent;
    stats::PairwiseCount computed;
    std::optional<std::pair<int, int>> reference;  // (better, worse)
};

struct WilcoxonComparison {
    std::string opponent;
    stats::WilcoxonResult computed;
    bool favors_subject = false;  // subject has the smaller errors (T− > T+ for subject − opponent)
    std::optional<double> reference_p;
};

struct ReplayReport {
    FixtureId fixture = FixtureId::D30;
    stats::ResultTable table;
    std::vector<RankComparison> ranks;
    std::vector<PairwiseComparison> pairwise;
    std::vector<WilcoxonComparison> wilcoxon;
};

/// Recomputes rank summaries, pairwise counts and Wilcoxon tests of the
/// subject against every other column. Reference values are attached when
/// data/reference files are present. Pure function of the data files.
ReplayReport replay_fixtures(FixtureId id, const std::filesystem::path& data_dir = default_data_dir());

void print_replay(std::ostream& out, const ReplayReport& report);

}  // namespace mcshms::harness
