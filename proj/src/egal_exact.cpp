#include "coopnet/egal_exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "coopnet/numeric.hpp"

namespace coopnet {

namespace {

// Single-candidate marginal gain; the inner kernel shared by the public op,
// the serial greedy and the parallel greedy.
double delta_gain_kernel(const Instance& inst, const std::vector<int>& selected, int u) {
    const int n = inst.agents();
    const int m = inst.outcomes();
    const Matrix& w = inst.wbar().entries();

    std::vector<double> parts(m, 0.0);
    for (int a = 0; a < m; ++a) {
        const int y = inst.label(a);
        if (inst.pred(a, u) == y) continue; // u must mispredict a
        double count = 0.0;
        for (int i = 0; i < n; ++i) {
            if (w(i, u) == 0.0) continue;
            if (!(inst.z_corr(a, i) < 0.0)) continue;
            bool blocked = false;
            for (int j : selected) {
                if (w(i, j) != 0.0 && inst.pred(a, j) != y) {
                    blocked = true; // i already gains on a through j
                    break;
                }
            }
            if (!blocked) count += 1.0;
        }
        parts[a] = inst.weight(a) * count;
    }
    return pairwise_sum(parts);
}

} // namespace

double delta_gain_exact(const Instance& inst, const std::vector<int>& selected, int u) {
    if (u < 0 || u >= inst.agents()) throw ValidationError("delta_gain_exact: u out of range");
    for (int j : selected)
        if (j == u) throw ValidationError("delta_gain_exact: u already selected");
    return delta_gain_kernel(inst, selected, u);
}

GreedyResult greedy_egal_exact(const Instance& inst, int k, double phi, ExecPolicy policy) {
    const int n = inst.agents();
    if (k < 1 || k > n) throw ValidationError("greedy: k out of range");
    if (!(phi > 0.0) || phi > 1.0) throw ValidationError("greedy: phi must lie in (0, 1]");

    GreedyResult res;
    res.plan.phi = phi;
    std::vector<bool> in_set(n, false);
    double cumulative = 0.0;

    for (int step = 0; step < k; ++step) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<double> gain(n, -1.0);
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int u = 0; u < n; ++u) {
                if (!in_set[u]) gain[u] = delta_gain_kernel(inst, res.plan.selected, u);
            }
        } else {
            for (int u = 0; u < n; ++u) {
                if (!in_set[u]) gain[u] = delta_gain_kernel(inst, res.plan.selected, u);
            }
        }
        int best = -1;
        double best_gain = -1.0;
        for (int u = 0; u < n; ++u) {
            if (in_set[u]) continue;
            if (gain[u] > best_gain) {
                best_gain = gain[u];
                best = u;
            }
        }
        const auto t1 = std::chrono::steady_clock::now();

        in_set[best] = true;
        res.plan.selected.push_back(best);
        cumulative += best_gain;
        res.trace.steps.push_back(
            {best, best_gain, cumulative,
             std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }
    return res;
}

BruteForceResult brute_force_opt_egal(const Instance& inst, int k, double phi) {
    const int n = inst.agents();
    if (k < 0 || k > n) throw ValidationError("brute force: k out of range");
    if (k == 0) return {{}, 0.0};

    // C(n, k) guard, saturating
    double combos = 1.0;
    for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
    if (combos > 1e6)
        throw CombinatorialBlowup("brute force: C(" + std::to_string(n) + "," +
                                  std::to_string(k) + ") exceeds 10^6");

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;

    BruteForceResult best;
    best.opt = -1.0;
    while (true) {
        InterventionPlan plan{subset, phi};
        const double g = gain_egal_direct(inst, plan, ExecPolicy::Serial);
        if (g > best.opt) { // lexicographic enumeration => first max is smallest subset
            best.opt = g;
            best.best = subset;
        }
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return best;
}

} // namespace coopnet
