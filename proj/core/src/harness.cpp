#include "mcshms/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "mcshms/hms.hpp"
#include "mcshms/mcs.hpp"
#include "mcshms/pso.hpp"
#include "mcshms/table_io.hpp"
#include "mcshms/test_functions.hpp"

#ifndef MCSHMS_DATA_DIR
#define MCSHMS_DATA_DIR "data"
#endif

namespace mcshms::harness {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    const auto value = io::trim(text);
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
        throw ConfigError("config key '" + std::string(key) + "': invalid number '" + std::string(value) + "'");
    }
    return out;
}

std::vector<std::string> parse_list(std::string_view text) {
    std::vector<std::string> out;
    for (auto& item : io::split(text, ',')) {
        if (!item.empty()) out.push_back(std::move(item));
    }
    return out;
}

}  // namespace

std::uint64_t algorithm_id(std::string_view algorithm) {
    for (std::size_t i = 0; i < kAlgorithms.size(); ++i) {
        if (kAlgorithms[i] == algorithm) return i;
    }
    throw ConfigError("unknown algorithm '" + std::string(algorithm) + "' (expected hms, mcs-hms or pso)");
}

std::uint64_t function_stream_id(std::size_t dim, std::size_t index) {
    return static_cast<std::uint64_t>(dim) * 1000 + index;
}

void ExperimentConfig::validate() const {
    const auto suites = functions::suite_names();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        throw ConfigError("unknown suite '" + suite + "'");
    }
    if (dims.empty()) throw ConfigError("dims must not be empty");
    const auto supported = functions::supported_dims();
    for (auto d : dims) {
        if (std::find(supported.begin(), supported.end(), d) == supported.end()) {
            throw ConfigError("unsupported dimension " + std::to_string(d) + " (expected one of 2, 10, 30, 50, 100)");
        }
    }
    if (algorithms.empty()) throw ConfigError("algorithms must not be empty");
    for (const auto& a : algorithms) algorithm_id(a);
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (parallelism < 1) throw ConfigError("parallelism must be at least 1");
    if (pop_size < 5) throw ConfigError("pop_size must be at least 5 (the cluster count)");
    if (nfe_max < pop_size) throw ConfigError("nfe_max must be at least pop_size");
}

void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value) {
    value = io::trim(value);
    if (key == "suite") {
        config.suite = std::string(value);
    } else if (key == "dims") {
        config.dims.clear();
        for (const auto& d : parse_list(value)) config.dims.push_back(parse_number<std::size_t>(key, d));
    } else if (key == "algorithms") {
        config.algorithms = parse_list(value);
    } else if (key == "runs") {
        config.runs = parse_number<int>(key, value);
    } else if (key == "nfe_max") {
        config.nfe_max = parse_number<std::int64_t>(key, value);
    } else if (key == "master_seed") {
        config.master_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "output_dir") {
        config.output_dir = std::string(value);
    } else if (key == "parallelism") {
        config.parallelism = parse_number<int>(key, value);
    } else if (key == "pop_size") {
        config.pop_size = parse_number<std::int64_t>(key, value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

ExperimentConfig parse_config_text(std::string_view text, ExperimentConfig base) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = io::trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        try {
            apply_setting(base, io::trim(view.substr(0, eq)), view.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return base;
}

ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), std::move(base));
}

RunResult run_algorithm(std::string_view algorithm, const Objective& objective, std::int64_t pop_size,
                        std::int64_t nfe_max, RngStream& rng) {
    if (algorithm == "pso") {
        PsoConfig cfg;
        cfg.pop_size = pop_size;
        cfg.nfe_max = nfe_max;
        cfg.seed = rng.seed();
        return run_pso(objective, cfg, rng);
    }
    RunConfig cfg;
    cfg.pop_size = pop_size;
    cfg.nfe_max = nfe_max;
    cfg.seed = rng.seed();
    if (algorithm == "hms") return run_hms(objective, cfg, rng);
    if (algorithm == "mcs-hms") return run_mcs_hms(objective, cfg, rng);
    throw ConfigError("unknown algorithm '" + std::string(algorithm) + "'");
}

ExperimentResults execute_experiment(const ExperimentConfig& config) {
    config.validate();

    std::vector<std::vector<Objective>> suites;
    for (auto dim : config.dims) suites.push_back(functions::make_suite(config.suite, dim, config.master_seed));

    struct Job {
        std::size_t dim_index;
        std::size_t function_index;
        std::size_t algorithm_index;
        int run;
    };
    std::vector<Job> jobs;
    for (std::size_t d = 0; d < config.dims.size(); ++d) {
        for (std::size_t f = 0; f < suites[d].size(); ++f) {
            for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
                for (int r = 0; r < config.runs; ++r) jobs.push_back({d, f, a, r});
            }
        }
    }

    std::vector<RawRecord> raw(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            try {
                const Objective& objective = suites[job.dim_index][job.function_index];
                const std::string& algorithm = config.algorithms[job.algorithm_index];
                const std::size_t dim = config.dims[job.dim_index];
                RngStream rng = derive_stream(config.master_seed, algorithm_id(algorithm),
                                              function_stream_id(dim, job.function_index),
                                              static_cast<std::uint64_t>(job.run));
                const std::uint64_t seed = rng.seed();
                const auto start = std::chrono::steady_clock::now();
                const RunResult result = run_algorithm(algorithm, objective, config.pop_size, config.nfe_max, rng);
                const auto elapsed = std::chrono::steady_clock::now() - start;
                RawRecord& rec = raw[i];
                rec.function = objective.name();
                rec.algorithm = algorithm;
                rec.dim = dim;
                rec.run = job.run;
                rec.seed = seed;
                rec.best_error = result.error;
                rec.nfe_used = result.nfe_used;
                rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(jobs.size());
                return;
            }
        }
    };

    const auto threads = static_cast<std::size_t>(std::max(1, config.parallelism));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(threads, jobs.size()); ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentResults results;
    results.summary = summarize(raw);
    results.raw = std::move(raw);
    return results;
}

ExperimentResults run_experiment(const ExperimentConfig& config) {
    ExperimentResults results = execute_experiment(config);
    std::filesystem::create_directories(config.output_dir);
    const auto raw_path = config.output_dir / "raw.csv";
    const auto summary_path = config.output_dir / "summary.csv";
    std::ofstream raw_out(raw_path);
    std::ofstream summary_out(summary_path);
    if (!raw_out || !summary_out) {
        throw std::runtime_error("cannot write results into " + config.output_dir.string());
    }
    write_raw_csv(raw_out, results.raw);
    write_summary_csv(summary_out, results.summary);
    return results;
}

std::vector<SummaryRecord> summarize(std::span<const RawRecord> raw) {
    // Group keys in first-seen order so output follows the run matrix order.
    std::vector<std::tuple<std::size_t, std::string, std::string>> keys;
    std::map<std::tuple<std::size_t, std::string, std::string>, std::vector<double>> errors;
    for (const auto& r : raw) {
        auto key = std::make_tuple(r.dim, r.function, r.algorithm);
        auto [it, inserted] = errors.try_emplace(key);
        if (inserted) keys.push_back(key);
        it->second.push_back(r.best_error);
    }

    std::vector<SummaryRecord> summary;
    for (const auto& key : keys) {
        const auto ms = stats::mean_std(errors.at(key));
        summary.push_back({std::get<1>(key), std::get<2>(key), std::get<0>(key), ms.mean, ms.std, 0.0});
    }
    const auto ranks = ranks_from_summary(summary);
    for (std::size_t i = 0; i < summary.size(); ++i) summary[i].rank = ranks[i].rank;
    return summary;
}

void write_raw_csv(std::ostream& out, std::span<const RawRecord> rows, bool include_wall_ms) {
    out << kRawHeader << '\n';
    for (const auto& r : rows) {
        out << r.function << ',' << r.algorithm << ',' << r.dim << ',' << r.run << ',' << r.seed << ','
            << io::format_double(r.best_error) << ',' << r.nfe_used << ',' << (include_wall_ms ? r.wall_ms : 0) << '\n';
    }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRecord> rows) {
    out << kSummaryHeader << '\n';
    for (const auto& r : rows) {
        out << r.function << ',' << r.algorithm << ',' << r.dim << ',' << io::format_double(r.mean_error) << ','
            << io::format_double(r.std_error) << ',' << io::format_double(r.rank) << '\n';
    }
}

std::vector<SummaryRecord> read_summary_csv(std::istream& in, const std::string& source) {
    const io::CsvDocument doc = io::parse_csv(in, source);
    const std::size_t c_function = doc.column_index("function");
    const std::size_t c_algorithm = doc.column_index("algorithm");
    const std::size_t c_dim = doc.column_index("dim");
    const std::size_t c_mean = doc.column_index("mean_error");
    std::optional<std::size_t> c_std;
    if (std::find(doc.header.begin(), doc.header.end(), "std_error") != doc.header.end()) {
        c_std = doc.column_index("std_error");
    }
    std::vector<SummaryRecord> out;
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        SummaryRecord rec;
        rec.function = doc.rows[r][c_function];
        rec.algorithm = doc.rows[r][c_algorithm];
        if (rec.algorithm.empty()) throw io::ParseError(source, doc.line_of(r), c_algorithm + 1, "empty algorithm");
        rec.dim = static_cast<std::size_t>(doc.integer(r, c_dim));
        rec.mean_error = doc.number(r, c_mean);
        if (c_std) rec.std_error = doc.number(r, *c_std);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<RankRecord> ranks_from_summary(std::span<const SummaryRecord> summary) {
    std::vector<std::string> algorithms;
    std::vector<std::pair<std::size_t, std::string>> groups;
    std::map<std::pair<std::size_t, std::string>, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < summary.size(); ++i) {
        const auto& s = summary[i];
        if (std::find(algorithms.begin(), algorithms.end(), s.algorithm) == algorithms.end()) {
            algorithms.push_back(s.algorithm);
        }
        auto key = std::make_pair(s.dim, s.function);
        auto [it, inserted] = members.try_emplace(key);
        if (inserted) groups.push_back(key);
        it->second.push_back(i);
    }

    std::vector<RankRecord> ranks(summary.size());
    for (const auto& key : groups) {
        const auto& idx = members.at(key);
        for (const auto& a : algorithms) {
            const bool present =
                std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return summary[i].algorithm == a; });
            if (!present) {
                throw std::invalid_argument("summary is missing algorithm '" + a + "' for function '" + key.second +
                                            "' (dim " + std::to_string(key.first) + ")");
            }
        }
        std::vector<double> values;
        for (auto i : idx) values.push_back(summary[i].mean_error);
        const auto row_ranks = stats::rank_row(values);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const auto& s = summary[idx[j]];
            ranks[idx[j]] = {s.function, s.algorithm, s.dim, row_ranks[j]};
        }
    }
    return ranks;
}

std::vector<RankRecord> ranks_from_table(const stats::ResultTable& table, std::size_t dim) {
    const auto ranks = stats::rank_matrix(table);
    std::vector<RankRecord> out;
    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
            out.push_back({table.functions[f], table.algorithms[a], dim, ranks[f][a]});
        }
    }
    return out;
}

void write_rank_csv(std::ostream& out, std::span<const RankRecord> rows) {
    out << kRankHeader << '\n';
    for (const auto& r : rows) {
        out << r.function << ',' << r.algorithm << ',' << r.dim << ',' << io::format_double(r.rank) << '\n';
    }
}

int count_rank(std::span<const RankRecord> rows, std::string_view algorithm, double rank) {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const RankRecord& r) {
        return r.algorithm == algorithm && r.rank == rank;
    }));
}

FixtureId parse_fixture_id(std::string_view text) {
    if (text == "D30" || text == "d30" || text == "30") return FixtureId::D30;
    if (text == "D50" || text == "d50" || text == "50") return FixtureId::D50;
    if (text == "D100" || text == "d100" || text == "100") return FixtureId::D100;
    throw ConfigError("unknown fixture '" + std::string(text) + "' (expected D30, D50 or D100)");
}

std::string_view fixture_name(FixtureId id) {
    switch (id) {
        case FixtureId::D30: return "D30";
        case FixtureId::D50: return "D50";
        case FixtureId::D100: return "D100";
    }
    return "?";
}

std::size_t fixture_dim(FixtureId id) {
    switch (id) {
        case FixtureId::D30: return 30;
        case FixtureId::D50: return 50;
        case FixtureId::D100: return 100;
    }
    return 0;
}

std::filesystem::path default_data_dir() { return MCSHMS_DATA_DIR; }

stats::ResultTable load_fixture(FixtureId id, const std::filesystem::path& data_dir) {
    const auto path = data_dir / "fixtures" / ("d" + std::to_string(fixture_dim(id)) + ".csv");
    if (!std::filesystem::exists(path)) throw io::ParseError(path.string(), 0, 0, "fixture file not found");
    return io::read_result_table(path);
}

ReplayReport replay_fixtures(FixtureId id, const std::filesystem::path& data_dir) {
    ReplayReport report;
    report.fixture = id;
    report.table = load_fixture(id, data_dir);
    const std::size_t dim = fixture_dim(id);
    const auto reference_dir = data_dir / "reference";

    std::map<std::string, ReferenceRank> ref_ranks;
    if (const auto path = reference_dir / ("ranks_d" + std::to_string(dim) + ".csv"); std::filesystem::exists(path)) {
        const auto doc = io::read_csv(path);
        const auto c_alg = doc.column_index("algorithm");
        const auto c_avg = doc.column_index("avg_rank");
        const auto c_best = doc.column_index("best_rank");
        const auto c_worst = doc.column_index("worst_rank");
        const auto c_std = doc.column_index("std_dev");
        for (std::size_t r = 0; r < doc.rows.size(); ++r) {
            ref_ranks[doc.rows[r][c_alg]] = {doc.number(r, c_avg), doc.number(r, c_best), doc.number(r, c_worst),
                                             doc.number(r, c_std)};
        }
    }
    std::map<std::string, std::pair<int, int>> ref_pairwise;
    if (const auto path = reference_dir / "pairwise.csv"; std::filesystem::exists(path)) {
        const auto doc = io::read_csv(path);
        const auto c_dim = doc.column_index("dim");
        const auto c_opp = doc.column_index("opponent");
        const auto c_better = doc.column_index("better");
        const auto c_worse = doc.column_index("worse");
        for (std::size_t r = 0; r < doc.rows.size(); ++r) {
            if (static_cast<std::size_t>(doc.integer(r, c_dim)) != dim) continue;
            ref_pairwise[doc.rows[r][c_opp]] = {static_cast<int>(doc.integer(r, c_better)),
                                                static_cast<int>(doc.integer(r, c_worse))};
        }
    }
    std::map<std::string, double> ref_p;
    if (const auto path = reference_dir / "wilcoxon.csv"; std::filesystem::exists(path)) {
        const auto doc = io::read_csv(path);
        const auto c_dim = doc.column_index("dim");
        const auto c_opp = doc.column_index("opponent");
        const auto c_p = doc.column_index("p_value");
        for (std::size_t r = 0; r < doc.rows.size(); ++r) {
            if (static_cast<std::size_t>(doc.integer(r, c_dim)) != dim) continue;
            ref_p[doc.rows[r][c_opp]] = doc.number(r, c_p);
        }
    }

    const auto summary = stats::rank_summary(report.table);
    for (const auto& computed : summary.per_algorithm) {
        RankComparison cmp{computed, std::nullopt};
        if (auto it = ref_ranks.find(computed.algorithm); it != ref_ranks.end()) cmp.reference = it->second;
        report.ranks.push_back(std::move(cmp));
    }

    const std::string subject(kSubjectAlgorithm);
    const auto subject_column = report.table.column(subject);
    for (const auto& opponent : report.table.algorithms) {
        if (opponent == subject) continue;
        PairwiseComparison pc{opponent, stats::pairwise_compare(report.table, subject, opponent), std::nullopt};
        if (auto it = ref_pairwise.find(opponent); it != ref_pairwise.end()) pc.reference = it->second;
        report.pairwise.push_back(std::move(pc));

        WilcoxonComparison wc;
        wc.opponent = opponent;
        wc.computed = stats::wilcoxon_signed_rank(subject_column, report.table.column(opponent));
        wc.favors_subject = wc.computed.t_minus > wc.computed.t_plus;
        if (auto it = ref_p.find(opponent); it != ref_p.end()) wc.reference_p = it->second;
        report.wilcoxon.push_back(std::move(wc));
    }
    return report;
}

void print_replay(std::ostream& out, const ReplayReport& report) {
    const auto flags = out.flags();
    const auto precision = out.precision();

    out << "Fixture " << fixture_name(report.fixture) << " (" << report.table.functions.size() << " functions, "
        << report.table.algorithms.size() << " algorithms)\n\n";

    out << "Rank summary (computed | reference | delta)\n";
    out << std::left << std::setw(10) << "algorithm" << std::right << std::setw(10) << "avg" << std::setw(8) << "best"
        << std::setw(8) << "worst" << std::setw(8) << "std" << "   |" << std::setw(8) << "avg" << std::setw(6) << "best"
        << std::setw(7) << "worst" << std::setw(7) << "std" << "   |" << std::setw(8) << "d_avg" << std::setw(8)
        << "d_std" << '\n';
    out << std::fixed;
    for (const auto& r : report.ranks) {
        const auto& c = r.computed;
        out << std::left << std::setw(10) << c.algorithm << std::right << std::setprecision(3) << std::setw(10)
            << c.avg_rank << std::setprecision(1) << std::setw(8) << c.best_rank << std::setw(8) << c.worst_rank
            << std::setprecision(3) << std::setw(8) << c.std_dev << "   |";
        if (r.reference) {
            const auto& p = *r.reference;
            out << std::setprecision(2) << std::setw(8) << p.avg_rank << std::setprecision(0) << std::setw(6)
                << p.best_rank << std::setw(7) << p.worst_rank << std::setprecision(2) << std::setw(7) << p.std_dev
                << "   |" << std::showpos << std::setprecision(3) << std::setw(8) << c.avg_rank - p.avg_rank
                << std::setw(8) << c.std_dev - p.std_dev << std::noshowpos;
        } else {
            out << "  (no reference)";
        }
        out << '\n';
    }

    out << "\nPairwise " << kSubjectAlgorithm << " vs opponent (better/worse/ties | reference)\n";
    for (const auto& p : report.pairwise) {
        out << std::left << std::setw(10) << p.opponent << std::right << std::setw(4) << p.computed.better << " /"
            << std::setw(3) << p.computed.worse << " /" << std::setw(3) << p.computed.ties << "   |";
        if (p.reference) {
            out << std::setw(4) << p.reference->first << " /" << std::setw(3) << p.reference->second
                << ((p.reference->first == p.computed.better && p.reference->second == p.computed.worse) ? "  match"
                                                                                                          : "  MISMATCH");
        } else {
            out << "  (no reference)";
        }
        out << '\n';
    }

    out << "\nTwo-sided Wilcoxon signed-rank, " << kSubjectAlgorithm << " vs opponent\n";
    out << std::scientific << std::setprecision(3);
    for (const auto& w : report.wilcoxon) {
        out << std::left << std::setw(10) << w.opponent << std::right << " W=" << std::setw(10) << w.computed.statistic
            << " p=" << std::setw(10) << w.computed.p_two_sided << (w.computed.exact ? " exact " : " normal")
            << (w.favors_subject ? "  favors " : "  against ") << kSubjectAlgorithm << "   |";
        if (w.reference_p) {
            out << " reference p=" << std::setw(10) << *w.reference_p;
        } else {
            out << " (no reference)";
        }
        out << '\n';
    }

    out.flags(flags);
    out.precision(precision);
}

}  // namespace mcshms::harness
