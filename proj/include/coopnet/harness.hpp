#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coopnet/instance.hpp"

namespace coopnet {

enum class BaselineMethod { Random, Degree, ErrRate, DegXErr };

/// Column nonzero counts of Wbar excluding the diagonal; the in-influence
/// degree used by the Degree and DegXErr baselines.
std::vector<int> in_influence_degree(const InfluenceMatrix& wbar);

/// Seed-selection heuristics the optimizers are benchmarked against. All are
/// prefix-nested in k; ties break toward the smallest index.
std::vector<int> baseline_select(BaselineMethod method, const Instance& inst, int k,
                                 std::uint64_t seed);

/// Egalitarian gain normalized by the faulty mass; defined as 1 on networks
/// with nothing to fix.
double accuracy(const Instance& inst, const InterventionPlan& plan);

struct SweepRow {
    std::string method;
    std::uint64_t seed = 0;
    int k = 0;
    double gain = 0.0;
    double acc = 0.0;
    double wall_ms = 0.0;
};

struct SweepSummary {
    std::string method;
    double acc_at_klog = 0.0; // Acc at k = ceil(log2 n)
    int k_at_90 = -1;         // minimal k with Acc > 0.9, -1 for "> k_max"
    int k_at_75 = -1;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SweepSummary> summaries;
};

/// All supported method names: exact greedy ("Egal"), threshold greedy
/// ("Appx"), and the four baselines.
const std::vector<std::string>& sweep_method_names();

/// Evaluate each method on one instance for every k in [1, k_max].
SweepResult sweep(const Instance& inst, const std::vector<std::string>& methods, int k_max,
                  std::uint64_t seed, double phi = 1.0);

} // namespace coopnet
