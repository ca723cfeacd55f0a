#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lotvns/oracle.hpp"
#include "lotvns/rng.hpp"
#include "support/reference.hpp"

namespace lotvns {
namespace {

using testing::make_instance;

TEST(Oracle, HandEnumeratedManufacturingInstance) {
    // [1,0] costs 1300, [1,1] costs 2000, anything starting with 0 is infeasible.
    const Instance inst = make_instance({{.demand = {2, 3}, .setup_m = 1000, .hold_m = 100}});
    const OracleResult r = enumerate_optimal(inst);
    EXPECT_EQ(r.cost, 1300);
    EXPECT_EQ(r.plan.setup_m(0, 0), 1);
    EXPECT_EQ(r.plan.setup_m(0, 1), 0);
    EXPECT_EQ(evaluate(inst, r.plan), r.cost);
}

TEST(Oracle, ZeroDemandIsFree) {
    GeneratorConfig cfg;
    cfg.products = 3;
    cfg.periods = 4;
    cfg.demand_max = 0;
    const OracleResult r = enumerate_optimal(generate_instance(cfg));
    EXPECT_EQ(r.cost, 0);
    EXPECT_EQ(r.plan, SetupPlan(3, 4));
}

Instance slice(const Instance& inst, const std::vector<std::size_t>& order) {
    Instance out = inst;
    out.products = order.size();
    out.demand = Matrix<Units>(order.size(), inst.periods);
    out.returns = Matrix<Units>(order.size(), inst.periods);
    auto pick = [&](const std::vector<Cents>& v) {
        std::vector<Cents> o;
        for (auto k : order) o.push_back(v[k]);
        return o;
    };
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t t = 0; t < inst.periods; ++t) {
            out.demand(i, t) = inst.demand(order[i], t);
            out.returns(i, t) = inst.returns(order[i], t);
        }
    out.setup_cost_m = pick(inst.setup_cost_m);
    out.setup_cost_r = pick(inst.setup_cost_r);
    out.holding_cost_m = pick(inst.holding_cost_m);
    out.holding_cost_r = pick(inst.holding_cost_r);
    out.unit_cost_m = pick(inst.unit_cost_m);
    out.unit_cost_r = pick(inst.unit_cost_r);
    return out;
}

TEST(Oracle, SeparableAndPermutationInvariant) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GeneratorConfig cfg;
        cfg.products = 3;
        cfg.periods = 5;
        cfg.demand_max = 9;
        cfg.seed = seed;
        const Instance inst = generate_instance(cfg);
        const Cents whole = enumerate_optimal(inst).cost;
        Cents parts = 0;
        for (std::size_t k = 0; k < 3; ++k) parts += enumerate_optimal(slice(inst, {k})).cost;
        EXPECT_EQ(whole, parts);
        EXPECT_EQ(enumerate_optimal(slice(inst, {2, 0, 1})).cost, whole);
    }
}

TEST(Oracle, AgreesWithIndependentBruteForce) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        GeneratorConfig cfg;
        cfg.products = 2;
        cfg.periods = 4;
        cfg.demand_max = 12;
        cfg.return_ratio = 0.8;
        cfg.seed = seed;
        const Instance inst = generate_instance(cfg);
        const Cents expected = testing::brute_force_product(inst, 0) + testing::brute_force_product(inst, 1);
        EXPECT_EQ(enumerate_optimal(inst).cost, expected);
    }
}

TEST(Oracle, LowerBoundsEveryPlan) {
    GeneratorConfig cfg;
    cfg.products = 2;
    cfg.periods = 5;
    cfg.demand_max = 9;
    cfg.seed = 77;
    const Instance inst = generate_instance(cfg);
    const Cents optimum = enumerate_optimal(inst).cost;
    Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        const Cents c = evaluate(inst, testing::random_plan(2, 5, rng, 128));
        ASSERT_GE(c, optimum);
    }
}

TEST(Oracle, RefusesLongHorizons) {
    GeneratorConfig cfg;
    cfg.products = 1;
    cfg.periods = kOracleMaxPeriods + 1;
    EXPECT_THROW((void)enumerate_optimal(generate_instance(cfg)), OracleRefused);
}

} // namespace
} // namespace lotvns
