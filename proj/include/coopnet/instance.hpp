#pragma once

#include <cstdint>
#include <vector>

#include "coopnet/matrix.hpp"

namespace coopnet {

enum class ExecPolicy { Serial, Parallel };

/// One realized object: probability mass, true label, and every agent's
/// innate prediction on it.
struct Outcome {
    double weight = 0.0;
    int label = 0;                  // +1 or -1
    std::vector<std::int8_t> preds; // length n, entries +1 or -1
};

struct InterventionPlan {
    std::vector<int> selected; // distinct agent indices
    double phi = 1.0;          // improvement strength in (0, 1]
};

/// Improved prediction table after an intervention; real-valued because
/// phi < 1 blends the innate prediction with the truth.
struct PredictionTable {
    int outcomes = 0;
    int agents = 0;
    std::vector<double> values; // outcomes x agents, row-major

    double operator()(int a, int j) const { return values[static_cast<std::size_t>(a) * agents + j]; }
};

struct ErrorProfile {
    std::vector<double> err;     // innate error rates
    std::vector<double> err_pos; // conditional on label +1
    std::vector<double> err_neg; // conditional on label -1
    bool label_independent = false;
};

/// A realized problem instance: finite weighted outcome set, the innate
/// prediction table, and the expressed influence matrix. Immutable after
/// construction; the correctness table Z(i,a) is precomputed.
class Instance {
public:
    Instance(InfluenceMatrix wbar, std::vector<Outcome> omega);

    int agents() const { return n_; }
    int outcomes() const { return m_; }
    const InfluenceMatrix& wbar() const { return wbar_; }
    double weight(int a) const { return weights_[a]; }
    int label(int a) const { return labels_[a]; }
    int pred(int a, int j) const { return preds_[static_cast<std::size_t>(a) * n_ + j]; }
    /// Precomputed Z(i,a) = y(a) * z*(i,a).
    double z_corr(int a, int i) const { return zcorr_[static_cast<std::size_t>(a) * n_ + i]; }

    std::vector<Outcome> to_outcomes() const;

private:
    int n_ = 0;
    int m_ = 0;
    InfluenceMatrix wbar_;
    std::vector<double> weights_;
    std::vector<std::int8_t> labels_;
    std::vector<std::int8_t> preds_;
    std::vector<double> zcorr_;
};

/// z*(.,a) = Wbar yhat(a).
Vector expressed(const Instance& inst, int a);

/// Z(.,a) = y(a) z*(.,a); negative entries are faulty predictions.
Vector correctness(const Instance& inst, int a);

/// ytilde_j(a) = (1-phi) yhat_j(a) + phi y(a) for j in S, unchanged otherwise.
PredictionTable apply_intervention(const Instance& inst, const InterventionPlan& plan);

/// Expected total correctness increase over all agents.
double gain_agg_direct(const Instance& inst, const InterventionPlan& plan,
                       ExecPolicy policy = ExecPolicy::Parallel);

/// Expected number of agents whose faulty predictions strictly improve.
double gain_egal_direct(const Instance& inst, const InterventionPlan& plan,
                        ExecPolicy policy = ExecPolicy::Parallel);

/// Innate error rates and their per-class conditional versions. An empty
/// class yields conditional rate 0 and label_independent = false.
ErrorProfile error_profile(const Instance& inst);

/// Expected number of faulty expressed predictions before any intervention;
/// the denominator of the accuracy metric.
double faulty_mass(const Instance& inst);

void validate_plan(const Instance& inst, const InterventionPlan& plan);

} // namespace coopnet
