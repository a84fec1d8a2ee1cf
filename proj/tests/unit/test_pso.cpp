#include <gtest/gtest.h>

#include "mcshms/pso.hpp"
#include "mcshms/test_functions.hpp"
#include "test_support.hpp"

using namespace mcshms;

namespace {

PsoConfig small_config(std::int64_t pop, std::int64_t nfe) {
    PsoConfig cfg;
    cfg.pop_size = pop;
    cfg.nfe_max = nfe;
    return cfg;
}

}  // namespace

TEST(PsoConfig, PublishedDefaults) {
    const PsoConfig cfg;
    EXPECT_EQ(cfg.w_start, 1.0);
    EXPECT_EQ(cfg.w_end, 0.0);
    EXPECT_EQ(cfg.c1, 2.0);
    EXPECT_EQ(cfg.c2, 2.0);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(PsoConfig, Invalid) {
    EXPECT_THROW(small_config(0, 100).validate(), ConfigError);
    EXPECT_THROW(small_config(20, 19).validate(), ConfigError);
    PsoConfig cfg;
    cfg.v_max_fraction = 0.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = PsoConfig{};
    cfg.c1 = -1.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(PsoInertia, LinearOverBudget) {
    const auto cfg = small_config(20, 1000);
    EXPECT_EQ(pso_inertia(cfg, 0), 1.0);
    EXPECT_EQ(pso_inertia(cfg, 500), 0.5);
    EXPECT_EQ(pso_inertia(cfg, 1000), 0.0);
}

TEST(RunPso, SolvesSmallSphere) {
    const auto f = functions::base_objective("sphere", 2);
    RngStream rng(2024);
    const auto r = run_pso(f, small_config(20, 10000), rng);
    EXPECT_LT(r.error, 1e-3);
    EXPECT_EQ(r.nfe_used, 10000);
}

TEST(RunPso, Deterministic) {
    const auto f = functions::make_suite("classic10", 10, 4)[1];
    RngStream a(5);
    RngStream b(5);
    EXPECT_EQ(run_pso(f, small_config(30, 3000), a), run_pso(f, small_config(30, 3000), b));
}

TEST(RunPso, InvalidConfigBeforeAnyEvaluation) {
    auto probe = std::make_shared<testkit::EvalProbe>();
    const auto f = testkit::probed(testkit::sphere(2), probe);
    RngStream rng(6);
    EXPECT_THROW(run_pso(f, small_config(20, 5), rng), ConfigError);
    EXPECT_EQ(probe->calls.load(), 0);
}

TEST(RunPso, StaysInBoundsAndCountsExactly) {
    auto probe = std::make_shared<testkit::EvalProbe>();
    const auto f = testkit::probed(functions::make_suite("classic10", 10, 5)[6], probe);
    RngStream rng(7);
    const auto r = run_pso(f, small_config(25, 4321), rng);
    EXPECT_FALSE(probe->out_of_bounds.load());
    EXPECT_EQ(probe->calls.load(), 4321);
    EXPECT_EQ(r.nfe_used, 4321);
}
