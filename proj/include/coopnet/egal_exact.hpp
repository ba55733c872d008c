#pragma once

#include <vector>

#include "coopnet/instance.hpp"

namespace coopnet {

struct GreedyStep {
    int chosen = -1;
    double marginal = 0.0;
    double cumulative = 0.0;
    double wall_ms = 0.0;
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
};

struct GreedyResult {
    InterventionPlan plan;
    GreedyTrace trace;
};

/// Marginal egalitarian gain of adding u to S, evaluated in one pass over
/// (outcome, agent) pairs: an agent i influenced by u gains on outcome a iff
/// its expressed prediction is faulty, every already-selected neighbor of i
/// predicted a correctly, and u mispredicted a.
double delta_gain_exact(const Instance& inst, const std::vector<int>& selected, int u);

/// Greedy maximization of the egalitarian objective with full access to the
/// outcome table. Candidate evaluations run in parallel; the argmax is a
/// deterministic scan with ties broken by smallest agent index.
GreedyResult greedy_egal_exact(const Instance& inst, int k, double phi,
                               ExecPolicy policy = ExecPolicy::Parallel);

struct BruteForceResult {
    std::vector<int> best;
    double opt = 0.0;
};

/// Exhaustive optimum over all size-k subsets; guard C(n,k) <= 10^6. Ties go
/// to the lexicographically smallest subset.
BruteForceResult brute_force_opt_egal(const Instance& inst, int k, double phi);

} // namespace coopnet
