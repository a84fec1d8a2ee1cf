// mcshms: experiment runner, fixture replay and rank report.
//
//   mcshms run    [--config FILE] [--suite S] [--dims 10,30] [--algorithms hms,mcs-hms,pso]
//                 [--runs N] [--nfe-max N] [--seed N] [--out DIR] [--parallelism N] [--pop-size N]
//   mcshms replay D30|D50|D100 [--data-dir DIR]
//   mcshms ranks  (--summary FILE | --fixture D30|D50|D100) [--out FILE] [--data-dir DIR]

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "mcshms/harness.hpp"
#include "mcshms/table_io.hpp"

namespace {

using namespace mcshms;

int fail(const std::string& stage, const std::exception& e) {
    std::cerr << "mcshms: " << stage << " failed: " << e.what() << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HMS / MCS-HMS benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Execute the algorithm x function x run matrix and write CSVs");
    std::string config_file;
    run->add_option("--config", config_file, "Flat key = value config file (CLI flags override it)")
        ->check(CLI::ExistingFile);
    std::vector<std::pair<std::string, std::string>> run_flags = {
        {"suite", "--suite"},       {"dims", "--dims"},         {"algorithms", "--algorithms"},
        {"runs", "--runs"},         {"nfe_max", "--nfe-max"},   {"master_seed", "--seed"},
        {"output_dir", "--out"},    {"parallelism", "--parallelism"}, {"pop_size", "--pop-size"},
    };
    std::vector<std::string> run_values(run_flags.size());
    std::vector<CLI::Option*> run_options;
    for (std::size_t i = 0; i < run_flags.size(); ++i) {
        run_options.push_back(run->add_option(run_flags[i].second, run_values[i], "config key " + run_flags[i].first));
    }

    // replay
    auto* replay = app.add_subcommand("replay", "Recompute rank, pairwise and Wilcoxon summaries from a fixture");
    std::string replay_fixture;
    std::string data_dir = harness::default_data_dir().string();
    replay->add_option("fixture", replay_fixture, "D30, D50 or D100")->required();
    replay->add_option("--data-dir", data_dir, "Directory holding fixtures/ and reference/");

    // ranks
    auto* ranks = app.add_subcommand("ranks", "Per-function rank CSV from a summary CSV or a fixture");
    std::string summary_file;
    std::string ranks_fixture;
    std::string ranks_out;
    auto* summary_opt = ranks->add_option("--summary", summary_file, "summary.csv written by 'run'");
    auto* fixture_opt = ranks->add_option("--fixture", ranks_fixture, "D30, D50 or D100");
    summary_opt->excludes(fixture_opt);
    ranks->add_option("--out", ranks_out, "Output file (default: stdout)");
    ranks->add_option("--data-dir", data_dir, "Directory holding fixtures/");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        harness::ExperimentConfig config;
        try {
            if (!config_file.empty()) config = harness::load_config_file(config_file);
            for (std::size_t i = 0; i < run_flags.size(); ++i) {
                if (run_options[i]->count() > 0) harness::apply_setting(config, run_flags[i].first, run_values[i]);
            }
            config.validate();
        } catch (const std::exception& e) {
            return fail("configuration", e);
        }
        try {
            const auto results = harness::run_experiment(config);
            std::cout << "wrote " << results.raw.size() << " runs to " << (config.output_dir / "raw.csv").string()
                      << " and " << results.summary.size() << " rows to "
                      << (config.output_dir / "summary.csv").string() << '\n';
        } catch (const std::exception& e) {
            return fail("run", e);
        }
        return 0;
    }

    if (replay->parsed()) {
        try {
            const auto report = harness::replay_fixtures(harness::parse_fixture_id(replay_fixture), data_dir);
            harness::print_replay(std::cout, report);
        } catch (const std::exception& e) {
            return fail("replay", e);
        }
        return 0;
    }

    if (ranks->parsed()) {
        std::vector<harness::RankRecord> rows;
        try {
            if (!summary_file.empty()) {
                std::ifstream in(summary_file);
                if (!in) throw std::runtime_error("cannot open " + summary_file);
                rows = harness::ranks_from_summary(harness::read_summary_csv(in, summary_file));
            } else if (!ranks_fixture.empty()) {
                const auto id = harness::parse_fixture_id(ranks_fixture);
                rows = harness::ranks_from_table(harness::load_fixture(id, data_dir), harness::fixture_dim(id));
            } else {
                throw std::invalid_argument("one of --summary or --fixture is required");
            }
        } catch (const std::exception& e) {
            return fail("ranks", e);
        }
        try {
            if (ranks_out.empty()) {
                harness::write_rank_csv(std::cout, rows);
            } else {
                std::ofstream out(ranks_out);
                if (!out) throw std::runtime_error("cannot write " + ranks_out);
                harness::write_rank_csv(out, rows);
            }
        } catch (const std::exception& e) {
            return fail("write", e);
        }
        return 0;
    }
    return 0;
}
