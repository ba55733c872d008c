#pragma once

#include <Eigen/Dense>

#include "coopnet/errors.hpp"

namespace coopnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Expressed influence matrix: the linear map from innate to expressed
/// predictions. Entries are validated to be finite and non-negative; the
/// non-negativity is what makes interventions never hurt any agent.
class InfluenceMatrix {
public:
    explicit InfluenceMatrix(Matrix entries) : w_(std::move(entries)) {
        if (w_.rows() < 1 || w_.rows() != w_.cols())
            throw ValidationError("influence matrix must be square with n >= 1");
        for (Eigen::Index j = 0; j < w_.cols(); ++j)
            for (Eigen::Index i = 0; i < w_.rows(); ++i) {
                const double v = w_(i, j);
                if (!std::isfinite(v) || v < 0.0)
                    throw ValidationError("influence matrix entries must be finite and >= 0");
            }
    }

    int size() const { return static_cast<int>(w_.rows()); }
    const Matrix& entries() const { return w_; }
    double operator()(int i, int j) const { return w_(i, j); }

private:
    Matrix w_;
};

// Max column l1 deviation between two equally sized matrices; the epsilon of
// the perturbation analyses.
inline double max_column_l1_deviation(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shapes differ");
    return (a - b).cwiseAbs().colwise().sum().maxCoeff();
}

} // namespace coopnet
