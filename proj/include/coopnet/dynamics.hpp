#pragma once

#include <vector>

#include "coopnet/matrix.hpp"

namespace coopnet {

enum class DynamicsKind { DeGroot, FJ, FiniteProduct, FJFiniteSteps };

/// Inputs of the supported averaging processes. `factors` holds the single
/// base matrix W for all kinds except FiniteProduct, which uses the whole
/// sequence W^(1).. W^(T) (applied as z^(t) = W^(t) z^(t-1)).
struct DynamicsSpec {
    DynamicsKind kind = DynamicsKind::DeGroot;
    std::vector<Matrix> factors;
    Vector stubbornness;             // alpha; FJ variants only, defaults to all-ones
    int steps = 0;                   // T; finite variants only
    double tolerance = 1e-10;
    long max_iterations = 1000000;

    const Matrix& base() const;
    Vector alpha_or_ones() const;
    void validate() const;
};

/// Limit of z^(t+1) = W z^(t) for row-stochastic W, computed by repeated
/// squaring. Throws NonConvergent for periodic chains.
InfluenceMatrix degroot_limit(const DynamicsSpec& spec);

/// (I + L)^{-1} for the combinatorial Laplacian L of symmetric W with zero
/// diagonal, via Cholesky solves (I + L is positive definite).
InfluenceMatrix fj_limit(const DynamicsSpec& spec);

/// Product W^(T) ... W^(1) of row-stochastic factors.
InfluenceMatrix finite_product(const DynamicsSpec& spec);

/// Linear map of T steps of the FJ update z <- C .* (W z + alpha .* yhat),
/// C_i = 1 / (1 + sum_j W_ij). T = 0 gives the identity.
InfluenceMatrix fj_finite_steps(const DynamicsSpec& spec);

/// Dispatch on spec.kind.
InfluenceMatrix expressed_influence(const DynamicsSpec& spec);

/// Run the update process itself on one innate vector until successive
/// iterates differ by at most spec.tolerance (finite kinds stop after their
/// fixed number of steps). Cross-checks the closed forms.
Vector simulate_until_converged(const DynamicsSpec& spec, const Vector& yhat);

} // namespace coopnet
