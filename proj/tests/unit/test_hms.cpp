#include <gtest/gtest.h>

#include <algorithm>

#include "mcshms/hms.hpp"
#include "mcshms/test_functions.hpp"
#include "test_support.hpp"

using namespace mcshms;

namespace {

RunConfig small_config(std::int64_t pop, std::int64_t nfe, int k = 5) {
    RunConfig cfg;
    cfg.pop_size = pop;
    cfg.nfe_max = nfe;
    cfg.k_clusters = k;
    return cfg;
}

// Replaces the population with fixed positions and matching values.
void set_population(HmsState& state, const Objective& f, const std::vector<Point>& positions) {
    state.population.clear();
    for (const auto& p : positions) state.population.push_back({p, f(p)});
}

}  // namespace

TEST(MoveToward, Examples) {
    EXPECT_EQ(move_toward(std::vector{10.0, 10.0}, std::vector{4.0, 2.0}, 1.0, std::vector{0.5, 0.5}),
              (std::vector{2.0, 1.0}));
    EXPECT_EQ(move_toward(std::vector{10.0, -3.0}, std::vector{4.0, 2.0}, 0.0, std::vector{0.3, 0.9}),
              (std::vector{10.0, -3.0}));
    EXPECT_EQ(move_toward(std::vector{10.0, -3.0}, std::vector{4.0, 2.0}, 1.0, std::vector{1.0, 1.0}),
              (std::vector{4.0, 2.0}));
    EXPECT_THROW(move_toward(std::vector{1.0}, std::vector{1.0, 2.0}, 1.0, std::vector{1.0}), std::invalid_argument);
}

TEST(InitializePopulation, UniformInBoxAndCounted) {
    const auto f = functions::base_objective("rosenbrock", 4);
    RngStream rng(1);
    const auto state = initialize_population(f, small_config(30, 1000), rng);
    EXPECT_EQ(state.population.size(), 30u);
    EXPECT_EQ(state.nfe(), 30);
    for (const auto& bid : state.population) {
        EXPECT_TRUE(in_bounds(bid.position, f));
        EXPECT_EQ(bid.value, f(bid.position));
    }
    const auto best = std::min_element(state.population.begin(), state.population.end(),
                                       [](const Bid& a, const Bid& b) { return a.value < b.value; });
    EXPECT_EQ(state.best().value, best->value);
}

TEST(InitializePopulation, InvalidConfigBeforeAnyEvaluation) {
    auto probe = std::make_shared<testkit::EvalProbe>();
    const auto f = testkit::probed(testkit::sphere(2), probe);
    RunConfig cfg = small_config(20, 1000);
    cfg.q_min = 1;
    RngStream rng(2);
    EXPECT_THROW(run_hms(f, cfg, rng), ConfigError);
    EXPECT_EQ(probe->calls.load(), 0);
}

TEST(MentalSearch, FixedMentalProcessesCountExactly) {
    const auto f = testkit::sphere(3);
    RunConfig cfg = small_config(10, 1000);
    cfg.q_min = cfg.q_max = 2;
    RngStream rng(3);
    auto state = initialize_population(f, cfg, rng);
    mental_search_phase(state, cfg, f, rng);
    EXPECT_EQ(state.nfe(), 10 + 2 * 10);
}

TEST(MentalSearch, GreedyReplacement) {
    const auto f = functions::base_objective("rastrigin", 5);
    const RunConfig cfg = small_config(25, 5000);
    RngStream rng(4);
    auto state = initialize_population(f, cfg, rng);
    for (int round = 0; round < 5; ++round) {
        const auto before = state.values();
        mental_search_phase(state, cfg, f, rng);
        for (std::size_t i = 0; i < before.size(); ++i) {
            EXPECT_LE(state.population[i].value, before[i]);
            EXPECT_EQ(state.population[i].value, f(state.population[i].position));
            EXPECT_TRUE(in_bounds(state.population[i].position, f));
        }
    }
}

TEST(MentalSearch, StopsWhenBudgetRunsOut) {
    const auto f = testkit::sphere(2);
    const RunConfig cfg = small_config(10, 17);
    RngStream rng(5);
    auto state = initialize_population(f, cfg, rng);
    mental_search_phase(state, cfg, f, rng);
    EXPECT_EQ(state.nfe(), 17);
}

TEST(GroupingHms, WinnerHasLowestMeanAndTargetIsItsBest) {
    const auto f = testkit::sphere(2);
    RngStream rng(6);
    auto state = initialize_population(f, small_config(9, 1000, 3), rng);
    // Three far-apart groups; values set so that group means are 5, 2 and 9.
    set_population(state, f,
                   {{-50, -50}, {-51, -50}, {-50, -51}, {0, 0}, {1, 0}, {0, 1}, {50, 50}, {51, 50}, {50, 51}});
    const std::vector<double> values = {4, 5, 6, 2.3, 1.5, 2.2, 8, 9, 10};
    for (std::size_t i = 0; i < values.size(); ++i) state.population[i].value = values[i];

    const Grouping g = grouping_phase_hms(state, small_config(9, 1000, 3), rng);
    const auto means = cluster_mean_values(g.assignment, state.values());
    EXPECT_NEAR(means[static_cast<std::size_t>(g.promising_cluster)], 2.0, 1e-12);
    EXPECT_EQ(g.target_index, 4u);
    EXPECT_EQ(g.target.value, 1.5);
    const auto members = g.assignment.members(g.promising_cluster);
    EXPECT_EQ(members, (std::vector<std::size_t>{3, 4, 5}));
}

TEST(GroupingHms, IdenticalBidsTieBreak) {
    const auto f = testkit::sphere(2);
    RngStream rng(7);
    auto state = initialize_population(f, small_config(8, 1000, 3), rng);
    set_population(state, f, std::vector<Point>(8, Point{3.0, 4.0}));
    const Grouping g = grouping_phase_hms(state, small_config(8, 1000, 3), rng);
    EXPECT_EQ(g.promising_cluster, 0);
    EXPECT_EQ(g.target.position, (Point{3.0, 4.0}));
    EXPECT_EQ(g.target_index, g.assignment.members(0).front());
}

TEST(Movement, NonWinnersLandOnScaledTarget) {
    const auto f = testkit::sphere(3);
    RngStream rng(8);
    auto state = initialize_population(f, small_config(12, 1000), rng);
    const auto before = state.positions();
    const Bid target{{40.0, -20.0, 10.0}, f(std::vector{40.0, -20.0, 10.0})};
    const std::vector<std::size_t> exempt = {1, 4, 7};

    RngStream replay = rng;
    movement_phase(state, target, exempt, 1.0, rng, f);
    EXPECT_EQ(state.nfe(), 12 + 9);

    for (std::size_t i = 0; i < before.size(); ++i) {
        if (std::find(exempt.begin(), exempt.end(), i) != exempt.end()) {
            EXPECT_EQ(state.population[i].position, before[i]);
            continue;
        }
        for (std::size_t j = 0; j < 3; ++j) {
            // x + (r·W − x) may round differently from r·W in the last bit.
            EXPECT_NEAR(state.population[i].position[j], replay.uniform() * target.position[j], 1e-12);
        }
        EXPECT_EQ(state.population[i].value, f(state.population[i].position));
    }
}

TEST(Movement, ZeroCoefficientKeepsPositions) {
    const auto f = testkit::sphere(2);
    RngStream rng(9);
    auto state = initialize_population(f, small_config(6, 100), rng);
    const auto before = state.positions();
    movement_phase(state, state.population[0], {}, 0.0, rng, f);
    EXPECT_EQ(state.positions(), before);
}

TEST(Movement, ClampsLargeCoefficient) {
    const auto f = testkit::sphere(2, -1.0, 1.0);
    RngStream rng(10);
    auto state = initialize_population(f, small_config(6, 100), rng);
    movement_phase(state, Bid{{1.0, -1.0}, 2.0}, {}, 50.0, rng, f);
    for (const auto& bid : state.population) EXPECT_TRUE(in_bounds(bid.position, f));
}

TEST(RunHms, SolvesSmallSphere) {
    const auto f = functions::base_objective("sphere", 2);
    RngStream rng(2024);
    const auto r = run_hms(f, small_config(20, 10000), rng);
    EXPECT_LT(r.error, 1e-4);
    EXPECT_EQ(r.nfe_used, 10000);
}

TEST(RunHms, InitializationOnlyBudget) {
    const auto f = testkit::sphere(4);
    const RunConfig cfg = small_config(20, 20);
    RngStream a(11);
    RngStream b(11);
    const auto r = run_hms(f, cfg, a);
    const auto state = initialize_population(f, cfg, b);
    EXPECT_EQ(r.nfe_used, 20);
    EXPECT_EQ(r.best_value, state.best().value);
    EXPECT_EQ(r.best_position, state.best().position);
}

TEST(RunHms, Deterministic) {
    const auto f = functions::make_suite("classic10", 10, 3)[2];
    RngStream a(12);
    RngStream b(12);
    EXPECT_EQ(run_hms(f, small_config(30, 3000), a), run_hms(f, small_config(30, 3000), b));
}

TEST(RunHms, ObserverSeesWinnerCluster) {
    const auto f = functions::base_objective("ackley", 3);
    RngStream rng(13);
    int calls = 0;
    run_hms(f, small_config(20, 3000), rng, [&](const IterationView& v) {
        ++calls;
        const auto means = cluster_mean_values(v.grouping.assignment, v.state.values());
        EXPECT_EQ(v.grouping.promising_cluster,
                  static_cast<int>(std::min_element(means.begin(), means.end()) - means.begin()));
        EXPECT_EQ(v.grouping.assignment.labels[v.grouping.target_index], v.grouping.promising_cluster);
    });
    EXPECT_GT(calls, 5);
}
