#pragma once

#include <string>
#include <vector>

#include "coopnet/approx_group.hpp"
#include "coopnet/egal_exact.hpp"
#include "coopnet/harness.hpp"
#include "coopnet/instance.hpp"
#include "coopnet/matrix.hpp"

namespace coopnet {

// All indices in files are 0-based. Doubles are written in shortest
// round-trip form so identical data produces identical bytes.

/// Dense CSV (one row per line) or sparse triplet CSV with header "i,j,w",
/// autodetected on read.
Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const Matrix& m, const std::string& path);
void write_matrix_triplets(const Matrix& m, const std::string& path);

/// Instance JSON: {format_version, n, omega:[{weight,label,preds}], wbar}.
/// `wbar` is either a path (resolved relative to the JSON file) or inline
/// CSV text (detected by an embedded newline).
Instance read_instance(const std::string& path);
void write_instance(const Instance& inst, const std::string& path,
                    const std::string& wbar_path = "");

/// Group JSON: {format_version, colors:["R"|"B"|"W"...], rho, err_indv, err_R}.
GroupStructure read_group(const std::string& path);
void write_group(const GroupStructure& group, const std::string& path);

struct PlanReport {
    InterventionPlan plan;
    std::vector<std::pair<std::string, double>> metrics; // name -> value, in order
};

void write_plan(const PlanReport& report, const std::string& path);
InterventionPlan read_plan(const std::string& path);

void write_trace_csv(const GreedyTrace& trace, const std::string& path);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path,
                     bool with_timings);
std::string sweep_summary_json(const std::vector<std::vector<SweepSummary>>& per_seed,
                               int k_max);

std::string format_double(double v);

} // namespace coopnet
