#pragma once

// Exhaustive reference oracles for the probabilistic gain quantities. These
// enumerate joint correctness patterns directly from the model definitions
// and deliberately share no code with the estimators they validate.

#include <cstdint>
#include <vector>

#include "coopnet/approx_group.hpp"
#include "coopnet/instance.hpp"
#include "coopnet/matrix.hpp"

namespace coopnet::oracle {

/// Exact per-row marginal-gain probability
///   P(Z(i,a) < 0 and all selected neighbors of i correct and u wrong)
/// under pairwise-independent classifiers with label-independent error
/// rates. `prior` = P(label +1); the value is prior-invariant but both label
/// branches are evaluated. Guard: n <= 20.
double delta_gain_ind(const Matrix& wbar, const std::vector<double>& err,
                      const std::vector<int>& selected, int u, int i, double prior = 0.5);

/// Exact egalitarian gain of a set under the independent model (the
/// distributional objective, not a realized table). Guard: n <= 20.
double egal_gain_ind(const Matrix& wbar, const std::vector<double>& err,
                     const std::vector<int>& selected, double prior = 0.5);

/// Exhaustive distributional optimum over size-k sets. Guard: C(n,k) <= 1e5.
std::pair<std::vector<int>, double> opt_egal_ind(const Matrix& wbar,
                                                 const std::vector<double>& err, int k,
                                                 double prior = 0.5);

/// Exact per-row marginal gain under the group-dependence model: the
/// rho-mixture of the group branch (enumerating the group coin and the free
/// white agents) and the fully individual branch. Guard per spec: at most 18
/// free enumerated agents.
double delta_gain_group(const Matrix& wbar, const GroupStructure& group,
                        const std::vector<int>& selected, int u, int i, double prior = 0.5);

/// Exact egalitarian gain of a set under the group model.
double egal_gain_group(const Matrix& wbar, const GroupStructure& group,
                       const std::vector<int>& selected, double prior = 0.5);

std::pair<std::vector<int>, double> opt_egal_group(const Matrix& wbar,
                                                   const GroupStructure& group, int k,
                                                   double prior = 0.5);

/// Monte-Carlo estimate of delta_gain_ind (for cross-checking the
/// enumerator); returns the sample mean over `samples` draws.
double mc_delta_gain_ind(const Matrix& wbar, const std::vector<double>& err,
                         const std::vector<int>& selected, int u, int i, long samples,
                         std::uint64_t seed);

double mc_delta_gain_group(const Matrix& wbar, const GroupStructure& group,
                           const std::vector<int>& selected, int u, int i, long samples,
                           std::uint64_t seed);

/// Sample a tabular instance whose predictions realize label-independent
/// per-agent error rates: the correctness of agent j on each outcome is an
/// independent coin with P(wrong) = err_j.
Instance sample_instance_from_errors(const InfluenceMatrix& wbar,
                                     const std::vector<double>& err, int omega_size,
                                     double prior, std::uint64_t seed);

} // namespace coopnet::oracle
