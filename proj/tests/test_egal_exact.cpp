#include <doctest.h>

#include <chrono>
#include <cmath>

#include "coopnet/egal_exact.hpp"
#include "coopnet/rng.hpp"
#include "testutil.hpp"

using namespace coopnet;

namespace {

Instance tiny_wrong() {
    Matrix w(1, 1);
    w << 1.0;
    return Instance(InfluenceMatrix(w), {Outcome{1.0, 1, {-1}}});
}

// hub 0 influences everyone with weight 2 and is the only mispredictor
Instance star(int n) {
    Matrix w = Matrix::Identity(n, n);
    for (int i = 0; i < n; ++i) w(i, 0) = 2.0;
    std::vector<std::int8_t> preds(n, 1);
    preds[0] = -1;
    return Instance(InfluenceMatrix(w), {Outcome{1.0, 1, preds}});
}

} // namespace

TEST_CASE("delta gain: spec base cases") {
    // u with empty influence column contributes nothing
    {
        Matrix w = Matrix::Zero(2, 2);
        w(0, 0) = 1.0; // column 1 is all zero
        Instance inst(InfluenceMatrix(w), {Outcome{1.0, 1, {-1, -1}}});
        CHECK(delta_gain_exact(inst, {}, 1) == 0.0);
    }
    CHECK(delta_gain_exact(tiny_wrong(), {}, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(delta_gain_exact(tiny_wrong(), {0}, 0), ValidationError);
}

TEST_CASE("delta gain equals the objective difference") {
    Rng rng(211);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        Instance inst = testutil::random_instance(n, 4, 0.5, rng);
        std::vector<int> pick = testutil::random_subset(n, 1 + static_cast<int>(rng.below(3)), rng);
        const int u = pick[0];
        std::vector<int> s(pick.begin() + 1, pick.end());
        const double delta = delta_gain_exact(inst, s, u);
        std::vector<int> su = s;
        su.push_back(u);
        const double diff =
            gain_egal_direct(inst, {su, 1.0}) - gain_egal_direct(inst, {s, 1.0});
        CHECK(std::abs(delta - diff) <= 1e-12);
    }
}

TEST_CASE("delta gain is zero for agents that never mispredict") {
    Rng rng(213);
    Instance inst = testutil::random_instance(6, 4, 0.6, rng);
    // rebuild with agent 2 always correct
    std::vector<Outcome> omega = inst.to_outcomes();
    for (Outcome& o : omega) o.preds[2] = static_cast<std::int8_t>(o.label);
    Instance fixed(inst.wbar(), omega);
    CHECK(delta_gain_exact(fixed, {}, 2) == 0.0);
    CHECK(delta_gain_exact(fixed, {0, 1}, 2) == 0.0);
}

TEST_CASE("greedy selects everything when k = n") {
    Rng rng(217);
    Instance inst = testutil::random_instance(6, 4, 0.5, rng);
    const GreedyResult res = greedy_egal_exact(inst, 6, 1.0);
    CHECK(res.plan.selected.size() == 6);
    const double full = gain_egal_direct(inst, res.plan);
    CHECK(res.trace.steps.back().cumulative == doctest::Approx(full).epsilon(1e-10));
    // the whole vertex set fixes everything fixable
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    CHECK(full == doctest::Approx(gain_egal_direct(inst, {all, 1.0})).epsilon(1e-12));
}

TEST_CASE("greedy marginals are non-increasing and match the direct gain") {
    Rng rng(219);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(6));
        Instance inst = testutil::random_instance(n, 5, 0.5, rng);
        const GreedyResult res = greedy_egal_exact(inst, std::min(n, 4), 1.0);
        for (std::size_t s = 1; s < res.trace.steps.size(); ++s)
            CHECK(res.trace.steps[s].marginal <= res.trace.steps[s - 1].marginal + 1e-12);
        CHECK(res.trace.steps.back().cumulative ==
              doctest::Approx(gain_egal_direct(inst, res.plan)).epsilon(1e-10));
    }
}

TEST_CASE("greedy achieves the submodular approximation ratio") {
    Rng rng(223);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(8));
        const int k = 1 + static_cast<int>(rng.below(3));
        Instance inst = testutil::random_instance(n, 5, 0.4, rng);
        const GreedyResult res = greedy_egal_exact(inst, k, 1.0);
        const BruteForceResult opt = brute_force_opt_egal(inst, k, 1.0);
        CHECK(gain_egal_direct(inst, res.plan) >= (1.0 - 1.0 / std::exp(1.0)) * opt.opt - 1e-9);
    }
}

TEST_CASE("serial and parallel greedy agree exactly") {
    Rng rng(227);
    for (int trial = 0; trial < 5; ++trial) {
        Instance inst = testutil::random_instance(12, 8, 0.4, rng);
        const GreedyResult p = greedy_egal_exact(inst, 4, 1.0, ExecPolicy::Parallel);
        const GreedyResult s = greedy_egal_exact(inst, 4, 1.0, ExecPolicy::Serial);
        CHECK(p.plan.selected == s.plan.selected);
        for (std::size_t i = 0; i < p.trace.steps.size(); ++i) {
            CHECK(p.trace.steps[i].marginal == s.trace.steps[i].marginal);
            CHECK(p.trace.steps[i].cumulative == s.trace.steps[i].cumulative);
        }
    }
}

TEST_CASE("brute force base cases, star agreement, and guard") {
    CHECK(brute_force_opt_egal(tiny_wrong(), 0, 1.0).opt == 0.0);
    {
        const BruteForceResult res = brute_force_opt_egal(tiny_wrong(), 1, 1.0);
        CHECK(res.best == std::vector<int>{0});
        CHECK(res.opt == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        const Instance s = star(7);
        const BruteForceResult opt = brute_force_opt_egal(s, 1, 1.0);
        const GreedyResult greedy = greedy_egal_exact(s, 1, 1.0);
        CHECK(opt.best == std::vector<int>{0});
        CHECK(greedy.plan.selected == std::vector<int>{0});
        CHECK(opt.opt == doctest::Approx(7.0).epsilon(1e-12));
    }
    {
        Rng rng(229);
        Instance inst = testutil::random_instance(60, 2, 0.3, rng);
        CHECK_THROWS_AS(brute_force_opt_egal(inst, 12, 1.0), CombinatorialBlowup);
    }
}

TEST_CASE("greedy wall time scales roughly linearly in the outcome count") {
    Rng rng(233);
    const int n = 96;
    auto run_ms = [&](int omega) {
        Instance inst = testutil::random_instance(n, omega, 0.3, rng);
        const auto t0 = std::chrono::steady_clock::now();
        greedy_egal_exact(inst, 2, 1.0, ExecPolicy::Serial);
        const auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count();
    };
    run_ms(256); // warm-up
    double small = 1e300, big = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        small = std::min(small, run_ms(256));
        big = std::min(big, run_ms(512));
    }
    CHECK(big <= 3.0 * 2.0 * small + 5.0); // coarse shape check with slack
}
