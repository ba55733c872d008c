#include "coopnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace coopnet {

using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

bool is_triplet_header(const std::string& line) {
    std::string s;
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s == "i,j,w";
}

Matrix parse_matrix_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool triplet = false;
    bool first = true;
    struct Trip {
        long i, j;
        double w;
    };
    std::vector<Trip> trips;
    long maxdim = -1;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && is_triplet_header(line)) {
            triplet = true;
            first = false;
            continue;
        }
        first = false;
        std::vector<double> vals;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ValidationError(origin + ": bad number '" + cell + "'");
            }
        }
        if (triplet) {
            if (vals.size() != 3) throw ValidationError(origin + ": triplet rows need i,j,w");
            const long i = static_cast<long>(vals[0]);
            const long j = static_cast<long>(vals[1]);
            if (i < 0 || j < 0) throw ValidationError(origin + ": negative index");
            trips.push_back({i, j, vals[2]});
            maxdim = std::max(maxdim, std::max(i, j));
        } else {
            rows.push_back(std::move(vals));
        }
    }

    if (triplet) {
        if (trips.empty()) throw ValidationError(origin + ": empty triplet matrix");
        const long n = maxdim + 1;
        Matrix m = Matrix::Zero(n, n);
        for (const Trip& t : trips) m(t.i, t.j) = t.w;
        return m;
    }
    if (rows.empty()) throw ValidationError(origin + ": empty matrix");
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw ValidationError(origin + ": ragged rows");
    Matrix m(n, rows.front().size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Matrix read_matrix_csv(const std::string& path) {
    return parse_matrix_csv(slurp(path), path);
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    spit(path, out.str());
}

void write_matrix_triplets(const Matrix& m, const std::string& path) {
    std::ostringstream out;
    out << "i,j,w\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0)
                out << i << ',' << j << ',' << format_double(m(i, j)) << '\n';
    spit(path, out.str());
}

Instance read_instance(const std::string& path) {
    json doc;
    try {
        doc = json::parse(slurp(path));
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != 1)
            throw ValidationError(path + ": unsupported format_version");
        const int n = doc.at("n").get<int>();

        const std::string wbar_field = doc.at("wbar").get<std::string>();
        Matrix w;
        if (wbar_field.find('\n') != std::string::npos) {
            w = parse_matrix_csv(wbar_field, path + "#wbar");
        } else {
            const auto base = std::filesystem::path(path).parent_path();
            w = read_matrix_csv((base / wbar_field).string());
        }
        if (w.rows() != n) throw ValidationError(path + ": wbar size != n");

        std::vector<Outcome> omega;
        for (const json& jo : doc.at("omega")) {
            Outcome o;
            o.weight = jo.at("weight").get<double>();
            o.label = jo.at("label").get<int>();
            for (const json& p : jo.at("preds"))
                o.preds.push_back(static_cast<std::int8_t>(p.get<int>()));
            omega.push_back(std::move(o));
        }
        return Instance(InfluenceMatrix(std::move(w)), std::move(omega));
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_instance(const Instance& inst, const std::string& path,
                    const std::string& wbar_path) {
    json doc;
    doc["format_version"] = 1;
    doc["n"] = inst.agents();
    json omega = json::array();
    for (const Outcome& o : inst.to_outcomes()) {
        json jo;
        jo["weight"] = o.weight;
        jo["label"] = o.label;
        json preds = json::array();
        for (std::int8_t p : o.preds) preds.push_back(static_cast<int>(p));
        jo["preds"] = std::move(preds);
        omega.push_back(std::move(jo));
    }
    doc["omega"] = std::move(omega);

    if (wbar_path.empty()) {
        std::ostringstream w;
        const Matrix& m = inst.wbar().entries();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                if (j) w << ',';
                w << format_double(m(i, j));
            }
            w << '\n';
        }
        doc["wbar"] = w.str();
    } else {
        write_matrix_csv(inst.wbar().entries(),
                         (std::filesystem::path(path).parent_path() / wbar_path).string());
        doc["wbar"] = wbar_path;
    }
    spit(path, doc.dump(2) + "\n");
}

GroupStructure read_group(const std::string& path) {
    json doc;
    try {
        doc = json::parse(slurp(path));
        if (doc.at("format_version").get<int>() != 1)
            throw ValidationError(path + ": unsupported format_version");
        GroupStructure g;
        for (const json& c : doc.at("colors")) {
            const std::string s = c.get<std::string>();
            if (s == "R")
                g.color.push_back(Color::Red);
            else if (s == "B")
                g.color.push_back(Color::Blue);
            else if (s == "W")
                g.color.push_back(Color::White);
            else
                throw ValidationError(path + ": colors must be R, B or W");
        }
        g.rho = doc.at("rho").get<double>();
        for (const json& e : doc.at("err_indv")) g.err_indv.push_back(e.get<double>());
        g.err_red = doc.at("err_R").get<double>();
        g.validate(static_cast<int>(g.color.size()));
        return g;
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_group(const GroupStructure& group, const std::string& path) {
    json doc;
    doc["format_version"] = 1;
    json colors = json::array();
    for (Color c : group.color)
        colors.push_back(c == Color::Red ? "R" : (c == Color::Blue ? "B" : "W"));
    doc["colors"] = std::move(colors);
    doc["rho"] = group.rho;
    doc["err_indv"] = group.err_indv;
    doc["err_R"] = group.err_red;
    spit(path, doc.dump(2) + "\n");
}

void write_plan(const PlanReport& report, const std::string& path) {
    json doc;
    doc["format_version"] = 1;
    doc["S"] = report.plan.selected;
    doc["phi"] = report.plan.phi;
    for (const auto& [name, value] : report.metrics) doc[name] = value;
    spit(path, doc.dump(2) + "\n");
}

InterventionPlan read_plan(const std::string& path) {
    try {
        const json doc = json::parse(slurp(path));
        InterventionPlan plan;
        for (const json& s : doc.at("S")) plan.selected.push_back(s.get<int>());
        plan.phi = doc.value("phi", 1.0);
        return plan;
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_trace_csv(const GreedyTrace& trace, const std::string& path) {
    std::ostringstream out;
    out << "step,chosen,marginal,cumulative\n";
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const GreedyStep& st = trace.steps[s];
        out << s << ',' << st.chosen << ',' << format_double(st.marginal) << ','
            << format_double(st.cumulative) << '\n';
    }
    spit(path, out.str());
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path,
                     bool with_timings) {
    std::ostringstream out;
    out << "method,seed,k,gain,acc,wall_ms\n";
    for (const SweepRow& r : rows) {
        out << r.method << ',' << r.seed << ',' << r.k << ',' << format_double(r.gain) << ','
            << format_double(r.acc) << ',' << (with_timings ? format_double(r.wall_ms) : "0")
            << '\n';
    }
    spit(path, out.str());
}

std::string sweep_summary_json(const std::vector<std::vector<SweepSummary>>& per_seed,
                               int k_max) {
    // Medians across seeds, mirroring the three report blocks: accuracy at
    // k = ceil(log2 n), then minimal k reaching 90% and 75% accuracy.
    json doc;
    doc["format_version"] = 1;
    doc["k_max"] = k_max;
    json acc_block, k90_block, k75_block;
    if (!per_seed.empty()) {
        const std::size_t nmethods = per_seed.front().size();
        for (std::size_t mi = 0; mi < nmethods; ++mi) {
            std::vector<double> accs;
            std::vector<int> k90s, k75s;
            for (const auto& seed_summaries : per_seed) {
                accs.push_back(seed_summaries[mi].acc_at_klog);
                k90s.push_back(seed_summaries[mi].k_at_90 < 0 ? k_max + 1
                                                              : seed_summaries[mi].k_at_90);
                k75s.push_back(seed_summaries[mi].k_at_75 < 0 ? k_max + 1
                                                              : seed_summaries[mi].k_at_75);
            }
            std::sort(accs.begin(), accs.end());
            std::sort(k90s.begin(), k90s.end());
            std::sort(k75s.begin(), k75s.end());
            const std::string name = per_seed.front()[mi].method;
            acc_block[name] = accs[accs.size() / 2];
            const int k90 = k90s[(k90s.size() - 1) / 2];
            const int k75 = k75s[(k75s.size() - 1) / 2];
            if (k90 > k_max)
                k90_block[name] = ">" + std::to_string(k_max);
            else
                k90_block[name] = k90;
            if (k75 > k_max)
                k75_block[name] = ">" + std::to_string(k_max);
            else
                k75_block[name] = k75;
        }
    }
    doc["acc_at_log2n"] = std::move(acc_block);
    doc["k_at_acc_90"] = std::move(k90_block);
    doc["k_at_acc_75"] = std::move(k75_block);
    return doc.dump(2) + "\n";
}

} // namespace coopnet
