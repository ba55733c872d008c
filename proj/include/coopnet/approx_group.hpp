#pragma once

#include <cstdint>
#include <vector>

#include "coopnet/approx_ind.hpp"
#include "coopnet/egal_exact.hpp"
#include "coopnet/matrix.hpp"

namespace coopnet {

enum class Color : std::uint8_t { Red, Blue, White };

/// Red/Blue/White partition with the group-decision probability rho. With
/// probability rho every red agent follows the red group classifier and every
/// blue agent its negation; otherwise all agents act individually.
struct GroupStructure {
    std::vector<Color> color;
    double rho = 0.0;
    std::vector<double> err_indv;
    double err_red = 0.5; // err(B) = 1 - err(R) by construction

    double err_blue() const { return 1.0 - err_red; }
    void validate(int n) const;
};

/// Row caches for the group-mode estimators: per-row color masses, the
/// white-restricted trust sum and Hoeffding denominators, and the color
/// imbalance DeltaW_i = |W_i(R) - W_i(B)|.
struct GroupPsiContext {
    GroupPsiContext(const InfluenceMatrix& wbar, const GroupStructure& group);

    const Matrix& w() const { return w_; }
    const GroupStructure& group() const { return group_; }
    int size() const { return n_; }
    double mass_red(int i) const { return mass_red_[i]; }
    double mass_blue(int i) const { return mass_blue_[i]; }
    double white_trust(int i) const { return white_trust_[i]; }
    double white_sumsq(int i) const { return white_sumsq_[i]; }
    double delta_w(int i) const { return std::abs(mass_red_[i] - mass_blue_[i]); }

private:
    Matrix w_; // owned copies; contexts outlive what they are built from
    GroupStructure group_;
    int n_;
    std::vector<double> mass_red_;
    std::vector<double> mass_blue_;
    std::vector<double> white_trust_; // sum_{j in W} Wbar_ij (1 - 2 err_indv_j)
    std::vector<double> white_sumsq_;
};

/// Psi_i(X,Y) = sum_{j not in X+Y} Wbar_ij (1 - 2 err_indv_j)
///            + Wbar_i(X) - Wbar_i(Y), for disjoint X, Y.
double psi_xy(const GroupPsiContext& ctx, int i, const std::vector<int>& x,
              const std::vector<int>& y);

/// Threshold estimator of the tail probabilities Gamma_i^+-(X,Y):
/// 0 when Psi_i(X,Y) >= 0, else 1.
int gamma_hat(const GroupPsiContext& ctx, int i, const std::vector<int>& x,
              const std::vector<int>& y);

/// Estimated marginal gain under group dependence: the rho-mixture of the
/// group-branch case analysis (bichromatic / monochromatic / colorless
/// selected neighborhoods) and the independent-mode estimate.
double approx_delta_gain_group(const GroupPsiContext& ctx, const std::vector<int>& selected,
                               int u);

/// Single-row mixture estimate without the candidate-sum gate.
double approx_delta_gain_group_row(const GroupPsiContext& ctx, const std::vector<int>& selected,
                                   int u, int i);

/// Certified error of the row's group-branch estimate: the case analysis's
/// Hoeffding terms at the actual threshold margins over the residual white
/// variance. The rho-mixture bound pairs this with ind_gain_error_bound.
double group_gain_error_bound(const GroupPsiContext& ctx, const std::vector<int>& selected,
                              int u, int i);

GreedyResult greedy_egal_appx_group(const InfluenceMatrix& wbar, const GroupStructure& group,
                                    int k, ExecPolicy policy = ExecPolicy::Parallel);

/// White-restricted ambiguity diagnostics with the per-row threshold
/// 4 sqrt(log n) + DeltaW_i, plus the Delta^gr proxy.
struct WAmbiguityReport {
    std::vector<bool> ambiguous;
    std::vector<double> statistic;
    std::vector<double> threshold;
    double delta_group = 0.0;
    int delta_argmin_u = -1;
};

WAmbiguityReport w_ambiguity_report(const InfluenceMatrix& wbar, const GroupStructure& group);

} // namespace coopnet
