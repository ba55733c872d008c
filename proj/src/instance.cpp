#include "coopnet/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coopnet/numeric.hpp"

namespace coopnet {

namespace {

constexpr double kWeightSumTol = 1e-12;

// Per-outcome contribution Sum_i (B_new(i,a) - Z(i,a)) computed from the
// improved table, i.e. the definitional route.
double agg_contrib(const Instance& inst, const PredictionTable& ytilde, int a) {
    const int n = inst.agents();
    const Matrix& w = inst.wbar().entries();
    Vector yt(n);
    for (int j = 0; j < n; ++j) yt(j) = ytilde(a, j);
    const Vector znew = w * yt;
    const double y = inst.label(a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += y * znew(i) - inst.z_corr(a, i);
    return s;
}

double egal_contrib(const Instance& inst, const PredictionTable& ytilde, int a) {
    const int n = inst.agents();
    const Matrix& w = inst.wbar().entries();
    Vector yt(n);
    for (int j = 0; j < n; ++j) yt(j) = ytilde(a, j);
    const Vector znew = w * yt;
    const double y = inst.label(a);
    int improved = 0;
    for (int i = 0; i < n; ++i) {
        const double z = inst.z_corr(a, i);
        if (z < 0.0 && z < y * znew(i)) ++improved;
    }
    return improved;
}

template <typename Contrib>
double weighted_sum_over_outcomes(const Instance& inst, ExecPolicy policy, Contrib&& f) {
    const int m = inst.outcomes();
    std::vector<double> parts(static_cast<std::size_t>(m));
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (int a = 0; a < m; ++a) parts[a] = inst.weight(a) * f(a);
    } else {
        for (int a = 0; a < m; ++a) parts[a] = inst.weight(a) * f(a);
    }
    return pairwise_sum(parts);
}

} // namespace

Instance::Instance(InfluenceMatrix wbar, std::vector<Outcome> omega)
    : n_(wbar.size()), m_(static_cast<int>(omega.size())), wbar_(std::move(wbar)) {
    if (omega.empty()) throw ValidationError("instance: outcome set is empty");

    weights_.reserve(m_);
    labels_.reserve(m_);
    preds_.reserve(static_cast<std::size_t>(m_) * n_);
    for (const Outcome& o : omega) {
        if (!(o.weight > 0.0)) throw ValidationError("instance: outcome weights must be > 0");
        if (o.label != 1 && o.label != -1)
            throw ValidationError("instance: labels must be +1 or -1");
        if (static_cast<int>(o.preds.size()) != n_)
            throw DimensionMismatch("instance: prediction vector length != n");
        for (std::int8_t p : o.preds)
            if (p != 1 && p != -1)
                throw ValidationError("instance: predictions must be +1 or -1");
        weights_.push_back(o.weight);
        labels_.push_back(static_cast<std::int8_t>(o.label));
        preds_.insert(preds_.end(), o.preds.begin(), o.preds.end());
    }
    const double total = pairwise_sum(weights_);
    if (std::abs(total - 1.0) > kWeightSumTol)
        throw ValidationError("instance: outcome weights must sum to 1, got " +
                              std::to_string(total));

    zcorr_.resize(static_cast<std::size_t>(m_) * n_);
    const Matrix& w = wbar_.entries();
    Vector yhat(n_);
    for (int a = 0; a < m_; ++a) {
        for (int j = 0; j < n_; ++j) yhat(j) = pred(a, j);
        const Vector z = w * yhat;
        for (int i = 0; i < n_; ++i)
            zcorr_[static_cast<std::size_t>(a) * n_ + i] = labels_[a] * z(i);
    }
}

std::vector<Outcome> Instance::to_outcomes() const {
    std::vector<Outcome> out(m_);
    for (int a = 0; a < m_; ++a) {
        out[a].weight = weights_[a];
        out[a].label = labels_[a];
        out[a].preds.assign(preds_.begin() + static_cast<std::size_t>(a) * n_,
                            preds_.begin() + static_cast<std::size_t>(a + 1) * n_);
    }
    return out;
}

void validate_plan(const Instance& inst, const InterventionPlan& plan) {
    if (!(plan.phi > 0.0) || plan.phi > 1.0)
        throw ValidationError("plan: phi must lie in (0, 1]");
    std::vector<bool> seen(inst.agents(), false);
    for (int j : plan.selected) {
        if (j < 0 || j >= inst.agents()) throw ValidationError("plan: agent index out of range");
        if (seen[j]) throw ValidationError("plan: duplicate agent in S");
        seen[j] = true;
    }
}

Vector expressed(const Instance& inst, int a) {
    if (a < 0 || a >= inst.outcomes()) throw ValidationError("expressed: outcome out of range");
    const int n = inst.agents();
    Vector yhat(n);
    for (int j = 0; j < n; ++j) yhat(j) = inst.pred(a, j);
    return inst.wbar().entries() * yhat;
}

Vector correctness(const Instance& inst, int a) {
    if (a < 0 || a >= inst.outcomes()) throw ValidationError("correctness: outcome out of range");
    Vector z(inst.agents());
    for (int i = 0; i < inst.agents(); ++i) z(i) = inst.z_corr(a, i);
    return z;
}

PredictionTable apply_intervention(const Instance& inst, const InterventionPlan& plan) {
    validate_plan(inst, plan);
    PredictionTable t;
    t.outcomes = inst.outcomes();
    t.agents = inst.agents();
    t.values.resize(static_cast<std::size_t>(t.outcomes) * t.agents);
    for (int a = 0; a < t.outcomes; ++a)
        for (int j = 0; j < t.agents; ++j)
            t.values[static_cast<std::size_t>(a) * t.agents + j] = inst.pred(a, j);
    for (int j : plan.selected)
        for (int a = 0; a < t.outcomes; ++a) {
            const double yhat = inst.pred(a, j);
            const double y = inst.label(a);
            t.values[static_cast<std::size_t>(a) * t.agents + j] =
                (1.0 - plan.phi) * yhat + plan.phi * y;
        }
    return t;
}

double gain_agg_direct(const Instance& inst, const InterventionPlan& plan, ExecPolicy policy) {
    validate_plan(inst, plan);
    if (plan.selected.empty()) return 0.0;
    const PredictionTable ytilde = apply_intervention(inst, plan);
    return weighted_sum_over_outcomes(inst, policy,
                                      [&](int a) { return agg_contrib(inst, ytilde, a); });
}

double gain_egal_direct(const Instance& inst, const InterventionPlan& plan, ExecPolicy policy) {
    validate_plan(inst, plan);
    if (plan.selected.empty()) return 0.0;
    const PredictionTable ytilde = apply_intervention(inst, plan);
    return weighted_sum_over_outcomes(inst, policy,
                                      [&](int a) { return egal_contrib(inst, ytilde, a); });
}

ErrorProfile error_profile(const Instance& inst) {
    const int n = inst.agents();
    const int m = inst.outcomes();
    ErrorProfile p;
    p.err.assign(n, 0.0);
    p.err_pos.assign(n, 0.0);
    p.err_neg.assign(n, 0.0);

    double mass_pos = 0.0;
    double mass_neg = 0.0;
    for (int a = 0; a < m; ++a)
        (inst.label(a) > 0 ? mass_pos : mass_neg) += inst.weight(a);

    for (int a = 0; a < m; ++a) {
        const double mu = inst.weight(a);
        const int y = inst.label(a);
        for (int j = 0; j < n; ++j) {
            if (inst.pred(a, j) == y) continue;
            p.err[j] += mu;
            (y > 0 ? p.err_pos[j] : p.err_neg[j]) += mu;
        }
    }
    if (mass_pos > 0.0)
        for (double& v : p.err_pos) v /= mass_pos;
    if (mass_neg > 0.0)
        for (double& v : p.err_neg) v /= mass_neg;

    p.label_independent = mass_pos > 0.0 && mass_neg > 0.0;
    for (int j = 0; p.label_independent && j < n; ++j)
        if (std::abs(p.err_pos[j] - p.err_neg[j]) > 1e-9) p.label_independent = false;
    return p;
}

double faulty_mass(const Instance& inst) {
    std::vector<double> parts(inst.outcomes());
    for (int a = 0; a < inst.outcomes(); ++a) {
        int faulty = 0;
        for (int i = 0; i < inst.agents(); ++i)
            if (inst.z_corr(a, i) < 0.0) ++faulty;
        parts[a] = inst.weight(a) * faulty;
    }
    return pairwise_sum(parts);
}

} // namespace coopnet
