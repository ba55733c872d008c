#include "coopnet/harness.hpp"

#include <chrono>
#include <cmath>

#include "coopnet/aggregate.hpp"
#include "coopnet/approx_ind.hpp"
#include "coopnet/egal_exact.hpp"
#include "coopnet/rng.hpp"

namespace coopnet {

std::vector<int> in_influence_degree(const InfluenceMatrix& wbar) {
    const int n = wbar.size();
    std::vector<int> deg(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j && wbar(i, j) != 0.0) ++deg[j];
    return deg;
}

std::vector<int> baseline_select(BaselineMethod method, const Instance& inst, int k,
                                 std::uint64_t seed) {
    const int n = inst.agents();
    if (k < 1 || k > n) throw ValidationError("baseline: k out of range");
    switch (method) {
        case BaselineMethod::Random: {
            Rng rng(seed);
            return rng.sample_without_replacement(n, k);
        }
        case BaselineMethod::Degree: {
            const std::vector<int> deg = in_influence_degree(inst.wbar());
            std::vector<double> score(deg.begin(), deg.end());
            return top_k_by_score(score, k);
        }
        case BaselineMethod::ErrRate: {
            return top_k_by_score(error_profile(inst).err, k);
        }
        case BaselineMethod::DegXErr: {
            const std::vector<int> deg = in_influence_degree(inst.wbar());
            const ErrorProfile prof = error_profile(inst);
            std::vector<double> score(n);
            for (int j = 0; j < n; ++j) score[j] = deg[j] * prof.err[j];
            return top_k_by_score(score, k);
        }
    }
    throw ValidationError("baseline: unknown method");
}

double accuracy(const Instance& inst, const InterventionPlan& plan) {
    const double zf = faulty_mass(inst);
    if (zf == 0.0) return 1.0;
    return gain_egal_direct(inst, plan) / zf;
}

const std::vector<std::string>& sweep_method_names() {
    static const std::vector<std::string> names = {"Rand",    "Degree", "ErrRate",
                                                   "DegXErr", "Appx",   "Egal"};
    return names;
}

namespace {

// Selection order for a method: the first k entries form its size-k set.
std::vector<int> selection_order(const std::string& method, const Instance& inst, int k_max,
                                 std::uint64_t seed, double phi) {
    if (method == "Rand")
        return baseline_select(BaselineMethod::Random, inst, k_max, seed);
    if (method == "Degree")
        return baseline_select(BaselineMethod::Degree, inst, k_max, seed);
    if (method == "ErrRate")
        return baseline_select(BaselineMethod::ErrRate, inst, k_max, seed);
    if (method == "DegXErr")
        return baseline_select(BaselineMethod::DegXErr, inst, k_max, seed);
    if (method == "Appx")
        return greedy_egal_appx_ind(inst.wbar(), error_profile(inst).err, k_max).plan.selected;
    if (method == "Egal")
        return greedy_egal_exact(inst, k_max, phi).plan.selected;
    throw ValidationError("sweep: unknown method " + method);
}

} // namespace

SweepResult sweep(const Instance& inst, const std::vector<std::string>& methods, int k_max,
                  std::uint64_t seed, double phi) {
    if (k_max < 1 || k_max > inst.agents()) throw ValidationError("sweep: k_max out of range");
    const double zf = faulty_mass(inst);
    const int klog = std::min<int>(
        k_max, std::max<int>(1, static_cast<int>(std::ceil(std::log2(inst.agents())))));

    SweepResult out;
    for (const std::string& method : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<int> order = selection_order(method, inst, k_max, seed, phi);
        const auto t1 = std::chrono::steady_clock::now();
        const double select_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        SweepSummary summary;
        summary.method = method;
        for (int k = 1; k <= k_max; ++k) {
            InterventionPlan plan{std::vector<int>(order.begin(), order.begin() + k), phi};
            const double gain = gain_egal_direct(inst, plan);
            const double acc = zf == 0.0 ? 1.0 : gain / zf;
            out.rows.push_back({method, seed, k, gain, acc, select_ms});
            if (k == klog) summary.acc_at_klog = acc;
            if (summary.k_at_90 < 0 && acc > 0.9) summary.k_at_90 = k;
            if (summary.k_at_75 < 0 && acc > 0.75) summary.k_at_75 = k;
        }
        out.summaries.push_back(summary);
    }
    return out;
}

} // namespace coopnet
