#pragma once

#include <vector>

#include "coopnet/instance.hpp"
#include "coopnet/matrix.hpp"

namespace coopnet {

/// Per-agent ranking keys for the aggregate problem: Inf(j) is the expected
/// aggregate improvement per unit of 2*phi when agent j is corrected, i.e.
/// err(v_j) times the total influence sum_i Wbar_ij of column j.
struct InfluenceScores {
    std::vector<double> inf;
};

InfluenceScores influence_scores(const InfluenceMatrix& wbar, const std::vector<double>& err,
                                 ExecPolicy policy = ExecPolicy::Parallel);

/// Exact solver for the aggregate objective: the k agents with the largest
/// influence scores, ties broken by smallest index. O(n^2 + n log n).
std::vector<int> select_top_k_agg(const InfluenceMatrix& wbar, const std::vector<double>& err,
                                  int k);

/// Closed-form aggregate gain 2 phi sum_{j in S} Inf(j).
double gain_agg_closed(const InfluenceMatrix& wbar, const std::vector<double>& err,
                       const std::vector<int>& selected, double phi);

/// Column-l1 perturbation size of an estimated influence matrix and the
/// conservative loss bound for selecting with the estimate: each of the k
/// scores is off by at most epsilon, so the selection loses at most
/// 2 * phi * 2 k epsilon <= 4 k epsilon phi of closed-form gain.
struct PerturbationBound {
    double epsilon = 0.0;     // max_j || col_j(Wbar) - col_j(Wbar_hat) ||_1
    double loss_bound = 0.0;  // 4 k epsilon phi
    double stated_bound = 0.0; // 2 k epsilon, reported for comparison
};

PerturbationBound agg_perturbation_bound(const InfluenceMatrix& wbar,
                                         const InfluenceMatrix& wbar_hat, int k, double phi);

/// Generic top-k by score with ties broken by ascending index.
std::vector<int> top_k_by_score(const std::vector<double>& score, int k);

} // namespace coopnet
