#include "coopnet/approx_ind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coopnet/numeric.hpp"

namespace coopnet {

namespace {

void check_errors(const std::vector<double>& err, int n) {
    if (static_cast<int>(err.size()) != n) throw DimensionMismatch("err length != n");
    for (double e : err)
        if (!(e >= 0.0) || e > 1.0) throw ValidationError("error rates must lie in [0, 1]");
}

// Greedy working state under independence: per-row selected-mass correction
// and the trust product over selected neighbors, both updated in O(n) per
// accepted candidate.
struct IndState {
    std::vector<double> sel_2err_w; // sum_{j in S} 2 err_j Wbar_ij
    std::vector<double> trust_prod; // prod_{j in S, Wbar_ij != 0} (1 - err_j)

    explicit IndState(int n) : sel_2err_w(n, 0.0), trust_prod(n, 1.0) {}

    void accept(const PsiContext& ctx, int g) {
        const int n = static_cast<int>(sel_2err_w.size());
        for (int i = 0; i < n; ++i) {
            const double wig = ctx.w()(i, g);
            if (wig == 0.0) continue;
            sel_2err_w[i] += 2.0 * ctx.errors()[g] * wig;
            trust_prod[i] *= 1.0 - ctx.errors()[g];
        }
    }
};

double candidate_gain(const PsiContext& ctx, const IndState& st, int u) {
    const int n = ctx.size();
    const double eu = ctx.errors()[u];
    if (eu == 0.0) return 0.0;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double wiu = ctx.w()(i, u);
        if (wiu == 0.0) continue;
        const double psi_isu = ctx.row_trust(i) + st.sel_2err_w[i] - 2.0 * wiu * (1.0 - eu);
        if (psi_isu < 0.0) total += eu * st.trust_prod[i];
    }
    return total;
}

} // namespace

PsiContext::PsiContext(const InfluenceMatrix& wbar, std::vector<double> err)
    : w_(wbar.entries()), n_(wbar.size()), err_(std::move(err)) {
    check_errors(err_, n_);
    row_trust_.assign(n_, 0.0);
    row_sumsq_.assign(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double t = 0.0, s = 0.0;
        for (int j = 0; j < n_; ++j) {
            const double w = w_(i, j);
            t += w * (1.0 - 2.0 * err_[j]);
            s += w * w;
        }
        row_trust_[i] = t;
        row_sumsq_[i] = s;
    }
}

double psi(const PsiContext& ctx, int i, const std::vector<int>& selected, int u) {
    // -Wbar_iu + sum_S Wbar_ij + (residual trust) reassembled from the row
    // cache: adding 2 err_j Wbar_ij converts a trust term into a selected one.
    double v = ctx.row_trust(i) - 2.0 * ctx.w()(i, u) * (1.0 - ctx.errors()[u]);
    for (int j : selected) {
        if (j == u) throw ValidationError("psi: u in S");
        v += 2.0 * ctx.errors()[j] * ctx.w()(i, j);
    }
    return v;
}

double psi_u(const PsiContext& ctx, int i, int u) {
    return ctx.row_trust(i) - 2.0 * ctx.errors()[u] * ctx.w()(i, u);
}

double approx_delta_gain_ind(const PsiContext& ctx, const std::vector<int>& selected, int u) {
    IndState st(ctx.size());
    for (int j : selected) {
        if (j == u) throw ValidationError("approx gain: u in S");
        st.accept(ctx, j);
    }
    return candidate_gain(ctx, st, u);
}

double approx_delta_gain_ind_row(const PsiContext& ctx, const std::vector<int>& selected,
                                 int u, int i) {
    if (psi(ctx, i, selected, u) >= 0.0) return 0.0;
    double v = ctx.errors()[u];
    for (int j : selected)
        if (ctx.w()(i, j) != 0.0) v *= 1.0 - ctx.errors()[j];
    return v;
}

double ind_gain_error_bound(const PsiContext& ctx, const std::vector<int>& selected, int u,
                            int i) {
    double sumsq = ctx.row_sumsq(i) - ctx.w()(i, u) * ctx.w()(i, u);
    for (int j : selected) sumsq -= ctx.w()(i, j) * ctx.w()(i, j);
    sumsq = std::max(sumsq, 0.0);
    return threshold_error_bound(psi(ctx, i, selected, u), sumsq);
}

GreedyResult greedy_egal_appx_ind(const InfluenceMatrix& wbar, const std::vector<double>& err,
                                  int k, ExecPolicy policy) {
    const int n = wbar.size();
    if (k < 1 || k > n) throw ValidationError("appx greedy: k out of range");
    PsiContext ctx(wbar, err);
    IndState st(n);

    GreedyResult res;
    std::vector<bool> in_set(n, false);
    double cumulative = 0.0;
    for (int step = 0; step < k; ++step) {
        std::vector<double> gain(n, -1.0);
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
            for (int u = 0; u < n; ++u) {
                if (!in_set[u]) gain[u] = candidate_gain(ctx, st, u);
            }
        } else {
            for (int u = 0; u < n; ++u) {
                if (!in_set[u]) gain[u] = candidate_gain(ctx, st, u);
            }
        }
        int best = -1;
        double best_gain = -1.0;
        for (int u = 0; u < n; ++u) {
            if (in_set[u]) continue;
            if (gain[u] > best_gain) {
                best_gain = gain[u];
                best = u;
            }
        }
        in_set[best] = true;
        st.accept(ctx, best);
        res.plan.selected.push_back(best);
        cumulative += best_gain;
        res.trace.steps.push_back({best, best_gain, cumulative, 0.0});
    }
    return res;
}

AmbiguityReport ambiguity_report(const InfluenceMatrix& wbar, const std::vector<double>& err) {
    const int n = wbar.size();
    if (n < 2) throw ValidationError("ambiguity report: n must be >= 2");
    PsiContext ctx(wbar, err);

    AmbiguityReport rep;
    rep.threshold = 4.0 * std::sqrt(std::log(static_cast<double>(n)));
    rep.ambiguous.assign(n, false);
    rep.statistic.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double norm = std::sqrt(ctx.row_sumsq(i));
        if (norm == 0.0) {
            rep.ambiguous[i] = true; // zero row: flagged by convention
            continue;
        }
        double pos = 0.0, neg = 0.0;
        for (int j = 0; j < n; ++j) {
            const double w = wbar(i, j);
            if (err[j] <= 0.5)
                pos += w * (1.0 - 2.0 * err[j]);
            else
                neg += w * (2.0 * err[j] - 1.0);
        }
        rep.statistic[i] = std::abs(pos - neg) / norm;
        rep.ambiguous[i] = rep.statistic[i] <= rep.threshold;
    }

    rep.delta_ind = std::numeric_limits<double>::infinity();
    for (int u = 0; u < n; ++u) {
        double d = 0.0;
        for (int i = 0; i < n; ++i) {
            if (ctx.row_sumsq(i) == 0.0) {
                d += 1.0;
                continue;
            }
            const double p = psi_u(ctx, i, u);
            d += std::exp(-p * p / (4.0 * ctx.row_sumsq(i)));
        }
        if (d < rep.delta_ind) {
            rep.delta_ind = d;
            rep.delta_argmin_u = u;
        }
    }
    return rep;
}

} // namespace coopnet
