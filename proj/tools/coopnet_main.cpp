// coopnet: intervention optimization for networks of cooperating classifiers.
//
// Subcommands: gen-graph, gen-instance, gen-group, weights, optimize,
// evaluate, sweep, fixture. Exit codes: 0 ok, 2 validation error,
// 3 convergence failure, 4 combinatorial guard.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "coopnet/aggregate.hpp"
#include "coopnet/approx_group.hpp"
#include "coopnet/approx_ind.hpp"
#include "coopnet/dynamics.hpp"
#include "coopnet/egal_exact.hpp"
#include "coopnet/generators.hpp"
#include "coopnet/harness.hpp"
#include "coopnet/io.hpp"
#include "coopnet/rng.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace coopnet;

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    int threads = 0;
    bool timings = false;
};

void write_or_print(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ValidationError("cannot write file: " + out);
    f << content;
}

Matrix load_weights_arg(const std::string& wbar_path, const std::string& graph_path,
                        int fj_steps) {
    if (!wbar_path.empty()) return read_matrix_csv(wbar_path);
    if (graph_path.empty())
        throw ValidationError("need --wbar or --graph");
    // default pipeline for raw graphs: finite-step FJ map
    DynamicsSpec spec;
    spec.kind = DynamicsKind::FJFiniteSteps;
    spec.factors.push_back(read_matrix_csv(graph_path));
    spec.steps = fj_steps;
    return fj_finite_steps(spec).entries();
}

std::vector<double> load_err_csv(const std::string& path) {
    const Matrix m = read_matrix_csv(path);
    std::vector<double> err;
    if (m.cols() == 1) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) err.push_back(m(i, 0));
    } else if (m.rows() == 1) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) err.push_back(m(j));
    } else {
        throw ValidationError(path + ": error-rate file must be a single row or column");
    }
    return err;
}

json trace_json(const GreedyTrace& trace) {
    json steps = json::array();
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        json st;
        st["step"] = s;
        st["chosen"] = trace.steps[s].chosen;
        st["marginal"] = trace.steps[s].marginal;
        st["cumulative"] = trace.steps[s].cumulative;
        steps.push_back(std::move(st));
    }
    return steps;
}

int run(int argc, char** argv) {
    CLI::App app{"intervention optimization for networks of cooperating classifiers"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after the subcommand

    GlobalOpts g;
    app.add_option("--seed", g.seed, "global RNG seed")->capture_default_str();
    app.add_option("--out", g.out, "output path (default: stdout for reports)");
    app.add_option("--format", g.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP thread count (0 = runtime default)");
    app.add_flag("--timings", g.timings, "include wall-clock columns in CSV output");

    // ---- gen-graph ----
    auto* gg = app.add_subcommand("gen-graph", "generate a random graph / weight matrix");
    std::string gg_model = "er";
    GraphSpec gspec;
    bool gg_triplet = false;
    bool gg_no_norm = false;
    gg->add_option("--model", gg_model, "er|pa|ws|randomw")
        ->check(CLI::IsMember({"er", "pa", "ws", "randomw"}))
        ->capture_default_str();
    gg->add_option("--n", gspec.n, "node count")->capture_default_str();
    gg->add_option("--p", gspec.p, "ER edge probability")->capture_default_str();
    gg->add_option("--m", gspec.m, "PA attachments per node")->capture_default_str();
    gg->add_option("--k-ring", gspec.k_ring, "WS ring neighbors")->capture_default_str();
    gg->add_option("--p-rewire", gspec.p_rewire, "WS rewire probability")->capture_default_str();
    gg->add_option("--sparsity", gspec.sparsity, "RandomW zero fraction")->capture_default_str();
    gg->add_flag("--no-row-normalize", gg_no_norm, "RandomW: skip row normalization");
    gg->add_flag("--triplet", gg_triplet, "write sparse triplet CSV instead of dense");

    // ---- weights ----
    auto* wt = app.add_subcommand("weights", "expressed influence matrix of a dynamics model");
    std::string wt_kind = "fj-finite";
    std::vector<std::string> wt_inputs;
    int wt_steps = 3;
    double wt_tol = 1e-10;
    long wt_maxit = 1000000;
    bool wt_triplet = false;
    wt->add_option("--kind", wt_kind, "degroot|fj|fj-finite|product")
        ->check(CLI::IsMember({"degroot", "fj", "fj-finite", "product"}))
        ->capture_default_str();
    wt->add_option("--w", wt_inputs, "weight matrix CSV (repeat for product factors)")
        ->required();
    wt->add_option("--t", wt_steps, "step count for fj-finite")->capture_default_str();
    wt->add_option("--tolerance", wt_tol, "convergence tolerance")->capture_default_str();
    wt->add_option("--max-iter", wt_maxit, "iteration budget")->capture_default_str();
    wt->add_flag("--triplet", wt_triplet, "write sparse triplet CSV");

    // ---- gen-instance ----
    auto* gi = app.add_subcommand("gen-instance", "sample a tabular instance");
    std::string gi_wbar, gi_graph, gi_wbar_out;
    InstanceSpec ispec;
    int gi_fj_steps = 3;
    gi->add_option("--wbar", gi_wbar, "expressed influence matrix CSV");
    gi->add_option("--graph", gi_graph, "raw graph CSV (finite-step FJ applied)");
    gi->add_option("--fj-steps", gi_fj_steps, "steps for the --graph pipeline")
        ->capture_default_str();
    gi->add_option("--omega", ispec.omega_size, "outcome count")->capture_default_str();
    gi->add_option("--p-min", ispec.p_min, "per-agent Bernoulli(+1) lower bound")
        ->capture_default_str();
    gi->add_option("--p-max", ispec.p_max, "per-agent Bernoulli(+1) upper bound")
        ->capture_default_str();
    gi->add_option("--prior", ispec.label_prior, "P(label = +1)")->capture_default_str();
    gi->add_flag("--class-balanced", ispec.class_balanced,
                 "mirror outcomes so per-class error rates match exactly");
    gi->add_option("--wbar-out", gi_wbar_out, "write wbar to this sibling CSV instead of inline");

    // ---- gen-group ----
    auto* gr = app.add_subcommand("gen-group", "sample an instance from the group model");
    std::string gr_wbar, gr_graph, gr_group, gr_group_out, gr_wbar_out;
    int gr_omega = 3;
    int gr_fj_steps = 3;
    double gr_prior = 0.5;
    double gr_frac_red = 0.25, gr_frac_blue = 0.25, gr_rho = 0.5, gr_err_r = 0.5;
    double gr_err_min = 0.1, gr_err_max = 0.7;
    gr->add_option("--wbar", gr_wbar, "expressed influence matrix CSV");
    gr->add_option("--graph", gr_graph, "raw graph CSV (finite-step FJ applied)");
    gr->add_option("--fj-steps", gr_fj_steps, "steps for the --graph pipeline")
        ->capture_default_str();
    gr->add_option("--group", gr_group, "existing group structure JSON");
    gr->add_option("--frac-red", gr_frac_red, "fraction of red agents (random structure)")
        ->capture_default_str();
    gr->add_option("--frac-blue", gr_frac_blue, "fraction of blue agents")->capture_default_str();
    gr->add_option("--rho", gr_rho, "group-decision probability")->capture_default_str();
    gr->add_option("--err-r", gr_err_r, "red group error rate")->capture_default_str();
    gr->add_option("--err-indv-min", gr_err_min, "individual error lower bound")
        ->capture_default_str();
    gr->add_option("--err-indv-max", gr_err_max, "individual error upper bound")
        ->capture_default_str();
    gr->add_option("--group-out", gr_group_out, "write the sampled group structure here");
    gr->add_option("--omega", gr_omega, "outcome count")->capture_default_str();
    gr->add_option("--prior", gr_prior, "P(label = +1)")->capture_default_str();
    gr->add_option("--wbar-out", gr_wbar_out, "write wbar to this sibling CSV instead of inline");

    // ---- fixture ----
    auto* fx = app.add_subcommand("fixture", "built-in benchmark instances");
    auto* fxa = fx->add_subcommand("adversarial",
                                   "error-rate-indistinguishable counterexample pair");
    int fx_n = 50, fx_variant = 1;
    fxa->add_option("--n", fx_n, "listener pairs per hub pair")->capture_default_str();
    fxa->add_option("--variant", fx_variant, "1|2")->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    fx->require_subcommand(1);

    // ---- optimize ----
    auto* op = app.add_subcommand("optimize", "select an intervention set");
    std::string op_objective = "egal", op_method = "exact";
    std::string op_instance, op_err, op_wbar, op_group, op_wbar_true, op_trace;
    int op_k = 1;
    double op_phi = 1.0;
    bool op_from_instance = false;
    op->add_option("--objective", op_objective, "agg|egal")
        ->check(CLI::IsMember({"agg", "egal"}))
        ->capture_default_str();
    op->add_option("--method", op_method, "exact|appx-ind|appx-group|brute")
        ->check(CLI::IsMember({"exact", "appx-ind", "appx-group", "brute"}))
        ->capture_default_str();
    op->add_option("--k", op_k, "intervention budget")->required();
    op->add_option("--phi", op_phi, "improvement strength in (0,1]")->capture_default_str();
    op->add_option("--instance", op_instance, "instance JSON");
    op->add_option("--err", op_err, "error-rate CSV (appx/agg without instance)");
    op->add_flag("--from-instance", op_from_instance,
                 "recompute error rates from the instance table");
    op->add_option("--wbar", op_wbar, "wbar CSV (when no instance is given)");
    op->add_option("--group", op_group, "group structure JSON (appx-group)");
    op->add_option("--wbar-true", op_wbar_true,
                   "true wbar CSV; reports the perturbation factor when --wbar is an estimate");
    op->add_option("--trace", op_trace, "write greedy trace CSV here");

    // ---- evaluate ----
    auto* ev = app.add_subcommand("evaluate", "evaluate a plan on an instance");
    std::string ev_instance, ev_plan;
    std::vector<int> ev_set;
    double ev_phi = 1.0;
    ev->add_option("--instance", ev_instance, "instance JSON")->required();
    ev->add_option("--plan", ev_plan, "plan JSON");
    ev->add_option("--set", ev_set, "explicit agent indices instead of --plan");
    ev->add_option("--phi", ev_phi, "phi for --set")->capture_default_str();

    // ---- sweep ----
    auto* sw = app.add_subcommand("sweep", "k-sweeps of optimizers and baselines");
    std::string sw_instance, sw_model = "pa", sw_methods = "Rand,Degree,ErrRate,DegXErr,Appx,Egal";
    std::string sw_summary_out;
    int sw_n = 128, sw_kmax = 7, sw_seeds = 1, sw_fj_steps = 3;
    double sw_phi = 1.0;
    GraphSpec sw_gspec;
    sw->add_option("--instance", sw_instance, "sweep one instance JSON instead of generating");
    sw->add_option("--model", sw_model, "er|pa|ws|randomw")
        ->check(CLI::IsMember({"er", "pa", "ws", "randomw"}))
        ->capture_default_str();
    sw->add_option("--n", sw_n, "node count")->capture_default_str();
    sw->add_option("--p", sw_gspec.p, "ER edge probability")->capture_default_str();
    sw->add_option("--m", sw_gspec.m, "PA attachments")->capture_default_str();
    sw->add_option("--k-ring", sw_gspec.k_ring, "WS ring neighbors")->capture_default_str();
    sw->add_option("--p-rewire", sw_gspec.p_rewire, "WS rewire probability")
        ->capture_default_str();
    sw->add_option("--sparsity", sw_gspec.sparsity, "RandomW zero fraction")
        ->capture_default_str();
    sw->add_option("--fj-steps", sw_fj_steps, "finite FJ steps for er/pa/ws")
        ->capture_default_str();
    sw->add_option("--k-max", sw_kmax, "largest k")->capture_default_str();
    sw->add_option("--seeds", sw_seeds, "number of dataset seeds")->capture_default_str();
    sw->add_option("--methods", sw_methods, "comma-separated method list")
        ->capture_default_str();
    sw->add_option("--phi", sw_phi, "improvement strength")->capture_default_str();
    sw->add_option("--summary", sw_summary_out, "write summary JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    if (g.threads > 0) omp_set_num_threads(g.threads);

    if (gg->parsed()) {
        gspec.seed = g.seed;
        gspec.row_normalize = !gg_no_norm;
        gspec.model = gg_model == "er"    ? GraphModel::ER
                      : gg_model == "pa"  ? GraphModel::PA
                      : gg_model == "ws"  ? GraphModel::WS
                                          : GraphModel::RandomW;
        const Matrix w = gen_graph(gspec);
        if (g.out.empty()) throw ValidationError("gen-graph: --out is required");
        if (gg_triplet)
            write_matrix_triplets(w, g.out);
        else
            write_matrix_csv(w, g.out);
        return exit_ok;
    }

    if (wt->parsed()) {
        DynamicsSpec spec;
        spec.tolerance = wt_tol;
        spec.max_iterations = wt_maxit;
        spec.steps = wt_steps;
        for (const std::string& p : wt_inputs) spec.factors.push_back(read_matrix_csv(p));
        if (wt_kind == "degroot")
            spec.kind = DynamicsKind::DeGroot;
        else if (wt_kind == "fj")
            spec.kind = DynamicsKind::FJ;
        else if (wt_kind == "fj-finite")
            spec.kind = DynamicsKind::FJFiniteSteps;
        else
            spec.kind = DynamicsKind::FiniteProduct;
        const InfluenceMatrix wbar = expressed_influence(spec);
        if (g.out.empty()) throw ValidationError("weights: --out is required");
        if (wt_triplet)
            write_matrix_triplets(wbar.entries(), g.out);
        else
            write_matrix_csv(wbar.entries(), g.out);
        return exit_ok;
    }

    if (gi->parsed()) {
        ispec.seed = g.seed;
        const InfluenceMatrix wbar(load_weights_arg(gi_wbar, gi_graph, gi_fj_steps));
        const Instance inst = gen_instance(wbar, ispec);
        if (g.out.empty()) throw ValidationError("gen-instance: --out is required");
        write_instance(inst, g.out, gi_wbar_out);
        return exit_ok;
    }

    if (gr->parsed()) {
        const InfluenceMatrix wbar(load_weights_arg(gr_wbar, gr_graph, gr_fj_steps));
        const int n = wbar.size();
        GroupStructure group;
        if (!gr_group.empty()) {
            group = read_group(gr_group);
        } else {
            if (gr_frac_red + gr_frac_blue > 1.0)
                throw ValidationError("gen-group: frac-red + frac-blue must be <= 1");
            Rng rng(g.seed + 0x67726f7570ULL); // separate stream from the outcome sampler
            group.rho = gr_rho;
            group.err_red = gr_err_r;
            group.color.assign(n, Color::White);
            group.err_indv.resize(n);
            for (int j = 0; j < n; ++j) {
                const double x = rng.u01();
                if (x < gr_frac_red)
                    group.color[j] = Color::Red;
                else if (x < gr_frac_red + gr_frac_blue)
                    group.color[j] = Color::Blue;
                group.err_indv[j] = rng.uniform(gr_err_min, gr_err_max);
            }
        }
        if (!gr_group_out.empty()) write_group(group, gr_group_out);
        const Instance inst = gen_group_instance(wbar, group, gr_omega, gr_prior, g.seed);
        if (g.out.empty()) throw ValidationError("gen-group: --out is required");
        write_instance(inst, g.out, gr_wbar_out);
        return exit_ok;
    }

    if (fx->parsed()) {
        const Instance inst = adversarial_fixture(fx_n, fx_variant);
        if (g.out.empty()) throw ValidationError("fixture: --out is required");
        write_instance(inst, g.out);
        return exit_ok;
    }

    if (op->parsed()) {
        std::optional<Instance> inst;
        if (!op_instance.empty()) inst = read_instance(op_instance);

        // Resolve wbar and error rates from the instance unless overridden.
        std::optional<InfluenceMatrix> wbar;
        if (!op_wbar.empty())
            wbar = InfluenceMatrix(read_matrix_csv(op_wbar));
        else if (inst)
            wbar = inst->wbar();
        std::vector<double> err;
        if (!op_err.empty())
            err = load_err_csv(op_err);
        else if (inst)
            err = error_profile(*inst).err;

        json doc;
        doc["format_version"] = 1;
        InterventionPlan plan;
        plan.phi = op_phi;

        if (op_objective == "agg") {
            if (!wbar || err.empty())
                throw ValidationError("optimize agg: need an instance or --wbar and --err");
            plan.selected = select_top_k_agg(*wbar, err, op_k);
            doc["S"] = plan.selected;
            doc["phi"] = op_phi;
            doc["scores"] = influence_scores(*wbar, err).inf;
            doc["gain_closed"] = gain_agg_closed(*wbar, err, plan.selected, op_phi);
            if (inst) doc["gain_direct"] = gain_agg_direct(*inst, plan);
        } else if (op_method == "exact") {
            if (!inst) throw ValidationError("optimize egal exact: --instance is required");
            GreedyResult res = greedy_egal_exact(*inst, op_k, op_phi);
            plan = res.plan;
            doc["S"] = plan.selected;
            doc["phi"] = op_phi;
            doc["gain"] = res.trace.steps.empty() ? 0.0 : res.trace.steps.back().cumulative;
            doc["gain_direct"] = gain_egal_direct(*inst, plan);
            doc["trace"] = trace_json(res.trace);
            if (!op_trace.empty()) write_trace_csv(res.trace, op_trace);
        } else if (op_method == "brute") {
            if (!inst) throw ValidationError("optimize egal brute: --instance is required");
            const BruteForceResult res = brute_force_opt_egal(*inst, op_k, op_phi);
            plan.selected = res.best;
            doc["S"] = plan.selected;
            doc["phi"] = op_phi;
            doc["gain"] = res.opt;
        } else if (op_method == "appx-ind") {
            if (!wbar || err.empty())
                throw ValidationError("optimize appx-ind: need an instance or --wbar and --err");
            GreedyResult res = greedy_egal_appx_ind(*wbar, err, op_k);
            plan = res.plan;
            doc["S"] = plan.selected;
            doc["phi"] = op_phi;
            doc["estimated_gain"] =
                res.trace.steps.empty() ? 0.0 : res.trace.steps.back().cumulative;
            const AmbiguityReport rep = ambiguity_report(*wbar, err);
            doc["delta_ind"] = rep.delta_ind;
            json flags = json::array();
            for (bool b : rep.ambiguous) flags.push_back(b ? 1 : 0);
            doc["ambiguous"] = std::move(flags);
            if (inst) doc["gain_direct"] = gain_egal_direct(*inst, plan);
            if (!op_wbar_true.empty()) {
                const InfluenceMatrix wt(read_matrix_csv(op_wbar_true));
                const double eps = max_column_l1_deviation(wt.entries(), wbar->entries());
                doc["epsilon"] = eps;
                doc["approx_w_factor"] = 1.0 - 8.0 * op_k * eps;
            }
            if (!op_trace.empty()) write_trace_csv(res.trace, op_trace);
        } else { // appx-group
            if (!wbar) throw ValidationError("optimize appx-group: need --wbar or --instance");
            if (op_group.empty()) throw ValidationError("optimize appx-group: --group is required");
            const GroupStructure group = read_group(op_group);
            GreedyResult res = greedy_egal_appx_group(*wbar, group, op_k);
            plan = res.plan;
            doc["S"] = plan.selected;
            doc["phi"] = op_phi;
            doc["estimated_gain"] =
                res.trace.steps.empty() ? 0.0 : res.trace.steps.back().cumulative;
            const WAmbiguityReport rep = w_ambiguity_report(*wbar, group);
            doc["delta_group"] = rep.delta_group;
            json flags = json::array();
            for (bool b : rep.ambiguous) flags.push_back(b ? 1 : 0);
            doc["w_ambiguous"] = std::move(flags);
            if (inst) doc["gain_direct"] = gain_egal_direct(*inst, plan);
            if (!op_trace.empty()) write_trace_csv(res.trace, op_trace);
        }
        write_or_print(g.out, doc.dump(2) + "\n");
        return exit_ok;
    }

    if (ev->parsed()) {
        const Instance inst = read_instance(ev_instance);
        InterventionPlan plan;
        if (!ev_plan.empty()) {
            plan = read_plan(ev_plan);
        } else {
            plan.selected = ev_set;
            plan.phi = ev_phi;
        }
        validate_plan(inst, plan);
        const double zf = faulty_mass(inst);
        const double egal = gain_egal_direct(inst, plan);
        const double agg = gain_agg_direct(inst, plan);
        const double acc = zf == 0.0 ? 1.0 : egal / zf;
        if (g.format == "csv") {
            std::ostringstream out;
            out << "metric,value\n";
            out << "gain_egal," << format_double(egal) << '\n';
            out << "gain_agg," << format_double(agg) << '\n';
            out << "faulty_mass," << format_double(zf) << '\n';
            out << "acc," << format_double(acc) << '\n';
            write_or_print(g.out, out.str());
        } else {
            json doc;
            doc["format_version"] = 1;
            doc["gain_egal"] = egal;
            doc["gain_agg"] = agg;
            doc["faulty_mass"] = zf;
            doc["acc"] = acc;
            write_or_print(g.out, doc.dump(2) + "\n");
        }
        return exit_ok;
    }

    if (sw->parsed()) {
        std::vector<std::string> methods;
        {
            std::istringstream ss(sw_methods);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) methods.push_back(tok);
        }
        std::vector<SweepRow> rows;
        std::vector<std::vector<SweepSummary>> summaries;
        if (!sw_instance.empty()) {
            const Instance inst = read_instance(sw_instance);
            SweepResult res = sweep(inst, methods, sw_kmax, g.seed, sw_phi);
            rows = std::move(res.rows);
            summaries.push_back(std::move(res.summaries));
        } else {
            sw_gspec.n = sw_n;
            sw_gspec.model = sw_model == "er"    ? GraphModel::ER
                             : sw_model == "pa"  ? GraphModel::PA
                             : sw_model == "ws"  ? GraphModel::WS
                                                 : GraphModel::RandomW;
            for (int s = 0; s < sw_seeds; ++s) {
                const std::uint64_t graph_seed = g.seed + 2 * static_cast<std::uint64_t>(s);
                const std::uint64_t inst_seed = graph_seed + 1;
                sw_gspec.seed = graph_seed;
                Matrix w = gen_graph(sw_gspec);
                if (sw_gspec.model != GraphModel::RandomW) {
                    DynamicsSpec spec;
                    spec.kind = DynamicsKind::FJFiniteSteps;
                    spec.factors.push_back(std::move(w));
                    spec.steps = sw_fj_steps;
                    w = fj_finite_steps(spec).entries();
                }
                InstanceSpec ispec2;
                ispec2.seed = inst_seed;
                const Instance inst = gen_instance(InfluenceMatrix(std::move(w)), ispec2);
                SweepResult res = sweep(inst, methods, sw_kmax, inst_seed, sw_phi);
                for (SweepRow& r : res.rows) {
                    r.seed = graph_seed;
                    rows.push_back(std::move(r));
                }
                summaries.push_back(std::move(res.summaries));
            }
        }
        if (g.out.empty()) throw ValidationError("sweep: --out is required");
        write_sweep_csv(rows, g.out, g.timings);
        if (!sw_summary_out.empty())
            write_or_print(sw_summary_out, sweep_summary_json(summaries, sw_kmax));
        return exit_ok;
    }

    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const coopnet::CombinatorialBlowup& e) {
        std::cerr << "error: " << e.what() << '\n';
        return coopnet::exit_guard;
    } catch (const coopnet::NonConvergent& e) {
        std::cerr << "error: " << e.what() << '\n';
        return coopnet::exit_convergence;
    } catch (const coopnet::SingularSystem& e) {
        std::cerr << "error: " << e.what() << '\n';
        return coopnet::exit_convergence;
    } catch (const coopnet::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return coopnet::exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
