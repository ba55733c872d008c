#include "coopnet/dynamics.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <string>

namespace coopnet {

namespace {

constexpr double kRowSumTol = 1e-9;

void require_square(const Matrix& w, const char* who) {
    if (w.rows() < 1 || w.rows() != w.cols())
        throw DimensionMismatch(std::string(who) + ": matrix must be square with n >= 1");
}

void require_row_stochastic(const Matrix& w, const char* who) {
    require_square(w, who);
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < w.cols(); ++j) {
            if (w(i, j) < 0.0 || !std::isfinite(w(i, j)))
                throw NotRowStochastic(std::string(who) + ": negative or non-finite entry");
            s += w(i, j);
        }
        if (std::abs(s - 1.0) > kRowSumTol)
            throw NotRowStochastic(std::string(who) + ": row " + std::to_string(i) +
                                   " sums to " + std::to_string(s));
    }
}

double inf_norm_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

const Matrix& DynamicsSpec::base() const {
    if (factors.empty()) throw ValidationError("dynamics spec has no weight matrix");
    return factors.front();
}

Vector DynamicsSpec::alpha_or_ones() const {
    if (stubbornness.size() == 0) return Vector::Ones(base().rows());
    return stubbornness;
}

void DynamicsSpec::validate() const {
    if (factors.empty()) throw ValidationError("dynamics spec has no weight matrix");
    const Eigen::Index n = factors.front().rows();
    for (const Matrix& f : factors) {
        require_square(f, "dynamics");
        if (f.rows() != n) throw DimensionMismatch("dynamics: factor sizes differ");
    }
    if (stubbornness.size() != 0 && stubbornness.size() != n)
        throw DimensionMismatch("dynamics: stubbornness length != n");
    if (tolerance <= 0.0) throw ValidationError("dynamics: tolerance must be positive");
    if (max_iterations <= 0) throw ValidationError("dynamics: max iterations must be positive");
}

InfluenceMatrix degroot_limit(const DynamicsSpec& spec) {
    spec.validate();
    const Matrix& w = spec.base();
    require_row_stochastic(w, "degroot");

    // Repeated squaring; a periodic chain stabilizes under squaring without
    // ever satisfying the fixed-point residual, so both are required.
    Matrix m = w;
    long effective = 1;
    while (effective <= spec.max_iterations) {
        Matrix m2 = m * m;
        effective *= 2;
        const double delta = inf_norm_diff(m2, m);
        m = std::move(m2);
        if (delta <= spec.tolerance && inf_norm_diff(w * m, m) <= spec.tolerance)
            return InfluenceMatrix(m);
    }
    throw NonConvergent("degroot: no convergence within iteration budget "
                        "(periodic chain?)");
}

InfluenceMatrix fj_limit(const DynamicsSpec& spec) {
    spec.validate();
    const Matrix& w = spec.base();
    require_square(w, "fj");
    const Eigen::Index n = w.rows();
    if (inf_norm_diff(w, w.transpose()) > 0.0)
        throw ValidationError("fj: closed form (I+L)^-1 requires symmetric W");
    for (Eigen::Index i = 0; i < n; ++i)
        if (w(i, i) != 0.0)
            throw ValidationError("fj: W must have zero diagonal (self-loops are not part "
                                  "of the Laplacian)");

    Matrix iplusl = -w;
    for (Eigen::Index i = 0; i < n; ++i) iplusl(i, i) = 1.0 + w.row(i).sum();

    Eigen::LLT<Matrix> llt(iplusl);
    if (llt.info() != Eigen::Success)
        throw SingularSystem("fj: Cholesky factorization of I+L failed");
    Matrix wbar = llt.solve(Matrix::Identity(n, n));

    // (I+L)^-1 is entrywise non-negative for non-negative W; tiny negative
    // round-off is clamped, anything worse is a solver failure.
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) {
            if (wbar(i, j) < -1e-12)
                throw SingularSystem("fj: solve produced significantly negative entries");
            if (wbar(i, j) < 0.0) wbar(i, j) = 0.0;
        }
    return InfluenceMatrix(std::move(wbar));
}

InfluenceMatrix finite_product(const DynamicsSpec& spec) {
    spec.validate();
    for (const Matrix& f : spec.factors) require_row_stochastic(f, "finite-product");
    // z^(T) = W^(T) ... W^(1) yhat
    Matrix acc = spec.factors.front();
    for (std::size_t t = 1; t < spec.factors.size(); ++t)
        acc = spec.factors[t] * acc;
    return InfluenceMatrix(std::move(acc));
}

InfluenceMatrix fj_finite_steps(const DynamicsSpec& spec) {
    spec.validate();
    const Matrix& w = spec.base();
    if (spec.steps < 0) throw ValidationError("fj-finite: T must be >= 0");
    for (Eigen::Index j = 0; j < w.cols(); ++j)
        for (Eigen::Index i = 0; i < w.rows(); ++i)
            if (w(i, j) < 0.0 || !std::isfinite(w(i, j)))
                throw ValidationError("fj-finite: entries must be finite and >= 0");

    const Eigen::Index n = w.rows();
    const Vector alpha = spec.alpha_or_ones();
    Vector c(n);
    for (Eigen::Index i = 0; i < n; ++i) c(i) = 1.0 / (1.0 + w.row(i).sum());

    const Matrix a = c.asDiagonal() * w;
    const Vector b = c.cwiseProduct(alpha);
    Matrix map = Matrix::Identity(n, n);
    for (int t = 0; t < spec.steps; ++t) {
        map = a * map;
        map.diagonal() += b;
    }
    return InfluenceMatrix(std::move(map));
}

InfluenceMatrix expressed_influence(const DynamicsSpec& spec) {
    switch (spec.kind) {
        case DynamicsKind::DeGroot: return degroot_limit(spec);
        case DynamicsKind::FJ: return fj_limit(spec);
        case DynamicsKind::FiniteProduct: return finite_product(spec);
        case DynamicsKind::FJFiniteSteps: return fj_finite_steps(spec);
    }
    throw ValidationError("unknown dynamics kind");
}

Vector simulate_until_converged(const DynamicsSpec& spec, const Vector& yhat) {
    spec.validate();
    const Matrix& w = spec.base();
    if (yhat.size() != w.rows()) throw DimensionMismatch("simulate: yhat length != n");

    switch (spec.kind) {
        case DynamicsKind::FiniteProduct: {
            Vector z = yhat;
            for (const Matrix& f : spec.factors) z = f * z;
            return z;
        }
        case DynamicsKind::FJFiniteSteps: {
            const Vector alpha = spec.alpha_or_ones();
            Vector c(w.rows());
            for (Eigen::Index i = 0; i < w.rows(); ++i) c(i) = 1.0 / (1.0 + w.row(i).sum());
            Vector z = yhat;
            for (int t = 0; t < spec.steps; ++t)
                z = c.cwiseProduct(w * z + alpha.cwiseProduct(yhat));
            return z;
        }
        case DynamicsKind::DeGroot: {
            require_row_stochastic(w, "degroot");
            Vector z = yhat;
            for (long it = 0; it < spec.max_iterations; ++it) {
                Vector next = w * z;
                const double delta = (next - z).cwiseAbs().maxCoeff();
                z = std::move(next);
                if (delta <= spec.tolerance) return z;
            }
            throw NonConvergent("degroot simulate: iteration budget exhausted");
        }
        case DynamicsKind::FJ: {
            const Vector alpha = spec.alpha_or_ones();
            Vector c(w.rows());
            for (Eigen::Index i = 0; i < w.rows(); ++i) c(i) = 1.0 / (1.0 + w.row(i).sum());
            Vector z = yhat;
            for (long it = 0; it < spec.max_iterations; ++it) {
                Vector next = c.cwiseProduct(w * z + alpha.cwiseProduct(yhat));
                const double delta = (next - z).cwiseAbs().maxCoeff();
                z = std::move(next);
                if (delta <= spec.tolerance) return z;
            }
            throw NonConvergent("fj simulate: iteration budget exhausted");
        }
    }
    throw ValidationError("unknown dynamics kind");
}

} // namespace coopnet
