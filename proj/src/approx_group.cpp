#include "coopnet/approx_group.hpp"

#include <cmath>
#include <limits>

#include "coopnet/numeric.hpp"

namespace coopnet {

namespace {

// Incremental greedy state. The independent branch needs the full-row
// selected mass and trust product; the group branch needs the white-restricted
// sums and the colors already present in each row's selected neighborhood.
struct GroupState {
    std::vector<double> sel_2err_w;   // sum_{j in S} 2 err_j Wbar_ij        (all colors)
    std::vector<double> trust_all;    // prod_{j in S_i} (1 - err_j)          (all colors)
    std::vector<double> sel_w_white;  // sum_{j in S cap W} Wbar_ij
    std::vector<double> sel_tw_white; // sum_{j in S cap W} Wbar_ij (1-2err_j)
    std::vector<double> sel_sq_white; // sum_{j in S cap W} Wbar_ij^2
    std::vector<double> trust_white;  // prod_{j in S_i cap W} (1 - err_j)
    std::vector<bool> has_red;        // S_i cap R nonempty
    std::vector<bool> has_blue;       // S_i cap B nonempty

    explicit GroupState(int n)
        : sel_2err_w(n, 0.0), trust_all(n, 1.0), sel_w_white(n, 0.0), sel_tw_white(n, 0.0),
          sel_sq_white(n, 0.0), trust_white(n, 1.0), has_red(n, false), has_blue(n, false) {}

    void accept(const GroupPsiContext& ctx, int g) {
        const int n = static_cast<int>(sel_2err_w.size());
        const double eg = ctx.group().err_indv[g];
        const Color cg = ctx.group().color[g];
        for (int i = 0; i < n; ++i) {
            const double wig = ctx.w()(i, g);
            if (wig == 0.0) continue;
            sel_2err_w[i] += 2.0 * eg * wig;
            trust_all[i] *= 1.0 - eg;
            switch (cg) {
                case Color::White:
                    sel_w_white[i] += wig;
                    sel_tw_white[i] += wig * (1.0 - 2.0 * eg);
                    sel_sq_white[i] += wig * wig;
                    trust_white[i] *= 1.0 - eg;
                    break;
                case Color::Red: has_red[i] = true; break;
                case Color::Blue: has_blue[i] = true; break;
            }
        }
    }
};

// One row's case analysis reduced to at most two threshold indicators:
// estimate = factor * (1(m1<0) w1 + 1(m2<0) w2), and the certified error is
// the same expression with the indicators replaced by Hoeffding terms over
// the residual white variance.
struct GroupCase {
    double factor = 0.0;
    double margin1 = 0.0, weight1 = 0.0;
    double margin2 = 0.0, weight2 = 0.0;
    double res_sumsq = 0.0;

    double estimate() const {
        return factor * ((margin1 < 0.0 ? weight1 : 0.0) + (margin2 < 0.0 ? weight2 : 0.0));
    }
    double error_bound() const {
        return factor * (weight1 * threshold_error_bound(margin1, res_sumsq) +
                         weight2 * threshold_error_bound(margin2, res_sumsq));
    }
};

GroupCase classify(const GroupPsiContext& ctx, const GroupState& st, int i, int u) {
    const GroupStructure& g = ctx.group();
    const double wiu = ctx.w()(i, u);
    const double eu = g.err_indv[u];
    const Color cu = g.color[u];

    GroupCase c;
    if (st.has_red[i] && st.has_blue[i]) return c; // opposing groups cannot both be right

    // residual white trust / variance over W \ S (and \ {u} when u is white)
    const double tw_res_s = ctx.white_trust(i) - st.sel_tw_white[i];
    c.res_sumsq = ctx.white_sumsq(i) - st.sel_sq_white[i];
    if (cu == Color::White) c.res_sumsq -= wiu * wiu;
    if (c.res_sumsq < 0.0) c.res_sumsq = 0.0;

    if (st.has_red[i] || st.has_blue[i]) {
        const bool red_sel = st.has_red[i];
        if ((red_sel && cu == Color::Red) || (!red_sel && cu == Color::Blue))
            return c; // u's group already constrained to be correct
        const double mass_c = red_sel ? ctx.mass_red(i) : ctx.mass_blue(i);
        const double mass_cbar = red_sel ? ctx.mass_blue(i) : ctx.mass_red(i);
        const double err_cbar = red_sel ? g.err_blue() : g.err_red;
        if (cu == Color::White) {
            c.factor = eu * st.trust_white[i];
            c.margin1 = tw_res_s - wiu * (1.0 - 2.0 * eu) + mass_c + st.sel_w_white[i] -
                        mass_cbar - wiu;
            c.weight1 = err_cbar;
            return c;
        }
        // u in the opposite color: Wbar_iu is already inside mass_cbar
        c.factor = st.trust_white[i];
        c.margin1 = tw_res_s + mass_c + st.sel_w_white[i] - mass_cbar;
        c.weight1 = err_cbar;
        return c;
    }

    // colorless S_i (subset of W)
    if (cu == Color::White) {
        const double tw_res = tw_res_s - wiu * (1.0 - 2.0 * eu);
        c.factor = eu * st.trust_white[i];
        c.margin1 = tw_res + ctx.mass_red(i) + st.sel_w_white[i] - ctx.mass_blue(i) - wiu;
        c.weight1 = g.err_blue();
        c.margin2 = tw_res + ctx.mass_blue(i) + st.sel_w_white[i] - ctx.mass_red(i) - wiu;
        c.weight2 = g.err_red;
        return c;
    }
    // colored u: the group branch pins yhat_u to its group classifier, so the
    // leading factor is the group error rate, not err_indv(u)
    c.factor = st.trust_white[i];
    if (cu == Color::Red) {
        c.margin1 = tw_res_s + ctx.mass_blue(i) + st.sel_w_white[i] - ctx.mass_red(i);
        c.weight1 = g.err_red;
    } else {
        c.margin1 = tw_res_s + ctx.mass_red(i) + st.sel_w_white[i] - ctx.mass_blue(i);
        c.weight1 = g.err_blue();
    }
    return c;
}

double candidate_gain_group(const GroupPsiContext& ctx, const std::vector<double>& row_trust,
                            const GroupState& st, int u) {
    const int n = ctx.size();
    const GroupStructure& g = ctx.group();
    const double eu = g.err_indv[u];
    const double rho = g.rho;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double wiu = ctx.w()(i, u);
        if (wiu == 0.0) continue;
        // independent branch, identical arithmetic to the ind module
        const double psi_ind = row_trust[i] + st.sel_2err_w[i] - 2.0 * wiu * (1.0 - eu);
        const double indv = psi_ind < 0.0 ? eu * st.trust_all[i] : 0.0;
        total += rho * classify(ctx, st, i, u).estimate() + (1.0 - rho) * indv;
    }
    return total;
}

std::vector<double> full_row_trust(const GroupPsiContext& ctx) {
    const int n = ctx.size();
    std::vector<double> t(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += ctx.w()(i, j) * (1.0 - 2.0 * ctx.group().err_indv[j]);
        t[i] = s;
    }
    return t;
}

} // namespace

void GroupStructure::validate(int n) const {
    if (static_cast<int>(color.size()) != n)
        throw DimensionMismatch("group: color vector length != n");
    if (static_cast<int>(err_indv.size()) != n)
        throw DimensionMismatch("group: err_indv length != n");
    if (!(rho >= 0.0) || rho > 1.0) throw ValidationError("group: rho must lie in [0, 1]");
    if (!(err_red >= 0.0) || err_red > 1.0)
        throw ValidationError("group: err_R must lie in [0, 1]");
    for (double e : err_indv)
        if (!(e >= 0.0) || e > 1.0)
            throw ValidationError("group: individual error rates must lie in [0, 1]");
}

GroupPsiContext::GroupPsiContext(const InfluenceMatrix& wbar, const GroupStructure& group)
    : w_(wbar.entries()), group_(group), n_(wbar.size()) {
    group.validate(n_);
    mass_red_.assign(n_, 0.0);
    mass_blue_.assign(n_, 0.0);
    white_trust_.assign(n_, 0.0);
    white_sumsq_.assign(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const double w = w_(i, j);
            switch (group.color[j]) {
                case Color::Red: mass_red_[i] += w; break;
                case Color::Blue: mass_blue_[i] += w; break;
                case Color::White:
                    white_trust_[i] += w * (1.0 - 2.0 * group.err_indv[j]);
                    white_sumsq_[i] += w * w;
                    break;
            }
        }
    }
}

double psi_xy(const GroupPsiContext& ctx, int i, const std::vector<int>& x,
              const std::vector<int>& y) {
    const int n = ctx.size();
    std::vector<std::int8_t> member(n, 0);
    for (int j : x) {
        if (j < 0 || j >= n) throw ValidationError("psi_xy: index out of range");
        member[j] = 1;
    }
    for (int j : y) {
        if (j < 0 || j >= n) throw ValidationError("psi_xy: index out of range");
        if (member[j]) throw ValidationError("psi_xy: X and Y overlap");
        member[j] = 2;
    }
    double v = 0.0;
    for (int j = 0; j < n; ++j) {
        const double w = ctx.w()(i, j);
        if (member[j] == 0)
            v += w * (1.0 - 2.0 * ctx.group().err_indv[j]);
        else if (member[j] == 1)
            v += w;
        else
            v -= w;
    }
    return v;
}

int gamma_hat(const GroupPsiContext& ctx, int i, const std::vector<int>& x,
              const std::vector<int>& y) {
    return psi_xy(ctx, i, x, y) >= 0.0 ? 0 : 1;
}

double approx_delta_gain_group(const GroupPsiContext& ctx, const std::vector<int>& selected,
                               int u) {
    GroupState st(ctx.size());
    for (int j : selected) {
        if (j == u) throw ValidationError("group gain: u in S");
        st.accept(ctx, j);
    }
    const std::vector<double> row_trust = full_row_trust(ctx);
    return candidate_gain_group(ctx, row_trust, st, u);
}

double approx_delta_gain_group_row(const GroupPsiContext& ctx, const std::vector<int>& selected,
                                   int u, int i) {
    GroupState st(ctx.size());
    for (int j : selected) {
        if (j == u) throw ValidationError("group gain: u in S");
        st.accept(ctx, j);
    }
    const GroupStructure& g = ctx.group();
    double tw_all = 0.0;
    for (int j = 0; j < ctx.size(); ++j)
        tw_all += ctx.w()(i, j) * (1.0 - 2.0 * g.err_indv[j]);
    const double psi_ind = tw_all + st.sel_2err_w[i] -
                           2.0 * ctx.w()(i, u) * (1.0 - g.err_indv[u]);
    const double indv = psi_ind < 0.0 ? g.err_indv[u] * st.trust_all[i] : 0.0;
    return g.rho * classify(ctx, st, i, u).estimate() + (1.0 - g.rho) * indv;
}

double group_gain_error_bound(const GroupPsiContext& ctx, const std::vector<int>& selected,
                              int u, int i) {
    GroupState st(ctx.size());
    for (int j : selected) {
        if (j == u) throw ValidationError("group bound: u in S");
        st.accept(ctx, j);
    }
    return classify(ctx, st, i, u).error_bound();
}

GreedyResult greedy_egal_appx_group(const InfluenceMatrix& wbar, const GroupStructure& group,
                                    int k, ExecPolicy policy) {
    const int n = wbar.size();
    if (k < 1 || k > n) throw ValidationError("group greedy: k out of range");
    GroupPsiContext ctx(wbar, group);
    GroupState st(n);
    const std::vector<double> row_trust = full_row_trust(ctx);

    GreedyResult res;
    std::vector<bool> in_set(n, false);
    double cumulative = 0.0;
    for (int step = 0; step < k; ++step) {
        std::vector<double> gain(n, -1.0);
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
            for (int u = 0; u < n; ++u) {
                if (!in_set[u]) gain[u] = candidate_gain_group(ctx, row_trust, st, u);
            }
        } else {
            for (int u = 0; u < n; ++u) {
                if (!in_set[u]) gain[u] = candidate_gain_group(ctx, row_trust, st, u);
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

WAmbiguityReport w_ambiguity_report(const InfluenceMatrix& wbar, const GroupStructure& group) {
    const int n = wbar.size();
    if (n < 2) throw ValidationError("w-ambiguity report: n must be >= 2");
    GroupPsiContext ctx(wbar, group);
    PsiContext ind_ctx(wbar, group.err_indv);

    WAmbiguityReport rep;
    const double base = 4.0 * std::sqrt(std::log(static_cast<double>(n)));
    rep.ambiguous.assign(n, false);
    rep.statistic.assign(n, 0.0);
    rep.threshold.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        rep.threshold[i] = base + ctx.delta_w(i);
        const double norm = std::sqrt(ctx.white_sumsq(i));
        if (norm == 0.0) {
            rep.ambiguous[i] = true;
            continue;
        }
        double pos = 0.0, neg = 0.0;
        for (int j = 0; j < n; ++j) {
            if (group.color[j] != Color::White) continue;
            const double w = wbar(i, j);
            const double e = group.err_indv[j];
            if (e <= 0.5)
                pos += w * (1.0 - 2.0 * e);
            else
                neg += w * (2.0 * e - 1.0);
        }
        rep.statistic[i] = std::abs(pos - neg) / norm;
        rep.ambiguous[i] = rep.statistic[i] <= rep.threshold[i];
    }

    rep.delta_group = std::numeric_limits<double>::infinity();
    for (int u = 0; u < n; ++u) {
        double d = 0.0;
        for (int i = 0; i < n; ++i) {
            double term_group = 1.0;
            if (ctx.white_sumsq(i) > 0.0) {
                const double psi_w =
                    ctx.white_trust(i) - 2.0 * group.err_indv[u] * wbar(i, u);
                const double margin = psi_w - ctx.delta_w(i);
                term_group = std::exp(-margin * margin / (4.0 * ctx.white_sumsq(i)));
            }
            double term_ind = 1.0;
            if (ind_ctx.row_sumsq(i) > 0.0) {
                const double p = psi_u(ind_ctx, i, u);
                term_ind = std::exp(-p * p / (4.0 * ind_ctx.row_sumsq(i)));
            }
            d += group.rho * term_group + (1.0 - group.rho) * term_ind;
        }
        if (d < rep.delta_group) {
            rep.delta_group = d;
            rep.delta_argmin_u = u;
        }
    }
    return rep;
}

} // namespace coopnet
