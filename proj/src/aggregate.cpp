#include "coopnet/aggregate.hpp"

#include <algorithm>
#include <numeric>

namespace coopnet {

InfluenceScores influence_scores(const InfluenceMatrix& wbar, const std::vector<double>& err,
                                 ExecPolicy policy) {
    const int n = wbar.size();
    if (static_cast<int>(err.size()) != n)
        throw DimensionMismatch("influence_scores: err length != n");
    InfluenceScores s;
    s.inf.assign(n, 0.0);
    const Matrix& w = wbar.entries();
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n; ++j) s.inf[j] = err[j] * w.col(j).sum();
    } else {
        for (int j = 0; j < n; ++j) s.inf[j] = err[j] * w.col(j).sum();
    }
    return s;
}

std::vector<int> top_k_by_score(const std::vector<double>& score, int k) {
    const int n = static_cast<int>(score.size());
    if (k < 1 || k > n) throw ValidationError("top-k: k out of range");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (score[a] != score[b]) return score[a] > score[b];
        return a < b;
    });
    order.resize(k);
    return order;
}

std::vector<int> select_top_k_agg(const InfluenceMatrix& wbar, const std::vector<double>& err,
                                  int k) {
    return top_k_by_score(influence_scores(wbar, err).inf, k);
}

double gain_agg_closed(const InfluenceMatrix& wbar, const std::vector<double>& err,
                       const std::vector<int>& selected, double phi) {
    const InfluenceScores s = influence_scores(wbar, err);
    double total = 0.0;
    for (int j : selected) {
        if (j < 0 || j >= wbar.size()) throw ValidationError("gain_agg_closed: index out of range");
        total += s.inf[j];
    }
    return 2.0 * phi * total;
}

PerturbationBound agg_perturbation_bound(const InfluenceMatrix& wbar,
                                         const InfluenceMatrix& wbar_hat, int k, double phi) {
    PerturbationBound b;
    b.epsilon = max_column_l1_deviation(wbar.entries(), wbar_hat.entries());
    b.loss_bound = 4.0 * k * b.epsilon * phi;
    b.stated_bound = 2.0 * k * b.epsilon;
    return b;
}

} // namespace coopnet
