#pragma once

#include <vector>

#include "coopnet/egal_exact.hpp"
#include "coopnet/matrix.hpp"

namespace coopnet {

/// Row caches driving the threshold estimator under pairwise independence:
/// row_trust_i = sum_j Wbar_ij (1 - 2 err_j) is the expected correctness
/// margin of agent i, row_sumsq_i the Hoeffding denominator.
struct PsiContext {
    PsiContext(const InfluenceMatrix& wbar, std::vector<double> err);

    const Matrix& w() const { return w_; }
    int size() const { return n_; }
    const std::vector<double>& errors() const { return err_; }
    double row_trust(int i) const { return row_trust_[i]; }
    double row_sumsq(int i) const { return row_sumsq_[i]; }

private:
    Matrix w_; // owned copy; contexts outlive the matrices they are built from
    int n_;
    std::vector<double> err_;
    std::vector<double> row_trust_;
    std::vector<double> row_sumsq_;
};

/// Psi_i(S,u) = -Wbar_iu + sum_{j in S} Wbar_ij
///            + sum_{j not in S+u} Wbar_ij (1 - 2 err_j),
/// evaluated from the caches in O(|S|).
double psi(const PsiContext& ctx, int i, const std::vector<int>& selected, int u);

/// S-independent margin Psi_i(u) = row_trust_i - 2 err_u Wbar_iu.
double psi_u(const PsiContext& ctx, int i, int u);

/// Estimated marginal gain sum over influenced rows of
/// 1(Psi_i(S,u) < 0) err(u) prod_{j in S, Wbar_ij != 0} (1 - err_j).
double approx_delta_gain_ind(const PsiContext& ctx, const std::vector<int>& selected, int u);

/// Single-row estimate by the same formula, without the Wbar_iu != 0 gate of
/// the candidate sum (the per-row claim holds for every row).
double approx_delta_gain_ind_row(const PsiContext& ctx, const std::vector<int>& selected,
                                 int u, int i);

/// Certified error of the row estimate: the Hoeffding term at the actual
/// margin Psi_i(S,u) over the residual (unconditioned) neighbors.
double ind_gain_error_bound(const PsiContext& ctx, const std::vector<int>& selected, int u,
                            int i);

/// Greedy over estimated gains; needs only error rates and Wbar.
GreedyResult greedy_egal_appx_ind(const InfluenceMatrix& wbar, const std::vector<double>& err,
                                  int k, ExecPolicy policy = ExecPolicy::Parallel);

/// Ambiguity diagnostics: an agent whose low-error and high-error
/// neighborhoods nearly cancel defeats the concentration estimate.
struct AmbiguityReport {
    std::vector<bool> ambiguous;
    std::vector<double> statistic; // |<W+,E+> - <W-,E->| / ||W_i||_2
    double threshold = 0.0;        // 4 sqrt(log n), natural log
    double delta_ind = 0.0;        // min_u sum_i exp(-Psi_i(u)^2 / (4 sum_j Wbar_ij^2))
    int delta_argmin_u = -1;
};

AmbiguityReport ambiguity_report(const InfluenceMatrix& wbar, const std::vector<double>& err);

} // namespace coopnet
