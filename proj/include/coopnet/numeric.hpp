#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace coopnet {

// Error certificate of a sign-threshold tail estimate: a weighted sum of
// independent [-1,1] variables misses a margin-m threshold with probability
// at most exp(-m^2 / (4 sum w^2)). With no residual variance the event is
// deterministic and only an exact tie (m = 0) can be misjudged.
inline double threshold_error_bound(double margin, double sumsq) {
    if (sumsq > 0.0) return std::exp(-margin * margin / (4.0 * sumsq));
    return margin == 0.0 ? 1.0 : 0.0;
}

// Fixed-order pairwise summation. Both the serial and the OpenMP code paths
// reduce per-item partials through this function, so results are identical
// regardless of thread count and carry ~log2(n) rounding instead of ~n.
inline double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& xs) {
    return pairwise_sum(std::span<const double>(xs.data(), xs.size()));
}

} // namespace coopnet
