#include "coopnet/generators.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "coopnet/rng.hpp"

namespace coopnet {

namespace {

Matrix gen_er(const GraphSpec& spec, Rng& rng) {
    if (spec.p < 0.0 || spec.p > 1.0) throw ValidationError("ER: p must lie in [0, 1]");
    Matrix w = Matrix::Zero(spec.n, spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j)
            if (rng.bernoulli(spec.p)) w(i, j) = w(j, i) = 1.0;
    return w;
}

// Preferential attachment: complete graph on the first m nodes, then each new
// node attaches m distinct edges with probability proportional to degree.
Matrix gen_pa(const GraphSpec& spec, Rng& rng) {
    const int n = spec.n, m = spec.m;
    if (m < 1 || m >= n) throw ValidationError("PA: need 1 <= m < n");
    Matrix w = Matrix::Zero(n, n);
    std::vector<int> endpoints; // one entry per edge endpoint, degree-weighted pool
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            w(i, j) = w(j, i) = 1.0;
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    if (m == 1) endpoints.push_back(0); // degenerate seed graph has no edges
    for (int v = m; v < n; ++v) {
        std::vector<int> targets;
        while (static_cast<int>(targets.size()) < m) {
            const int t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (int t : targets) {
            w(v, t) = w(t, v) = 1.0;
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return w;
}

Matrix gen_ws(const GraphSpec& spec, Rng& rng) {
    const int n = spec.n;
    const int half = spec.k_ring / 2; // odd k behaves like k-1, as in the usual construction
    if (half < 1 || 2 * half >= n) throw ValidationError("WS: invalid ring degree");
    if (spec.p_rewire < 0.0 || spec.p_rewire > 1.0)
        throw ValidationError("WS: rewire probability must lie in [0, 1]");
    Matrix w = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= half; ++d) {
            const int j = (i + d) % n;
            w(i, j) = w(j, i) = 1.0;
        }
    for (int d = 1; d <= half; ++d)
        for (int i = 0; i < n; ++i) {
            const int j = (i + d) % n;
            if (!rng.bernoulli(spec.p_rewire)) continue;
            if (w.row(i).sum() >= n - 1) continue; // node already saturated
            int t = static_cast<int>(rng.below(n));
            while (t == i || w(i, t) != 0.0) t = static_cast<int>(rng.below(n));
            w(i, j) = w(j, i) = 0.0;
            w(i, t) = w(t, i) = 1.0;
        }
    return w;
}

Matrix gen_randomw(const GraphSpec& spec, Rng& rng) {
    const int n = spec.n;
    if (spec.sparsity < 0.0 || spec.sparsity >= 1.0)
        throw ValidationError("RandomW: sparsity must lie in [0, 1)");
    Matrix w = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = rng.u01();
            if (rng.u01() >= spec.sparsity) w(i, j) = v;
        }
    for (int i = 0; i < n; ++i) {
        double s = w.row(i).sum();
        if (s == 0.0) { // an all-zero row cannot be normalized; keep a self-weight
            w(i, i) = 1.0;
            s = 1.0;
        }
        if (spec.row_normalize) w.row(i) /= s;
    }
    return w;
}

} // namespace

Matrix gen_graph(const GraphSpec& spec) {
    if (spec.n < 1) throw ValidationError("gen_graph: n must be >= 1");
    Rng rng(spec.seed);
    switch (spec.model) {
        case GraphModel::ER: return gen_er(spec, rng);
        case GraphModel::PA: return gen_pa(spec, rng);
        case GraphModel::WS: return gen_ws(spec, rng);
        case GraphModel::RandomW: return gen_randomw(spec, rng);
    }
    throw ValidationError("gen_graph: unknown model");
}

Instance gen_instance(const InfluenceMatrix& wbar, const InstanceSpec& spec) {
    const int n = wbar.size();
    if (spec.omega_size < 1) throw ValidationError("gen_instance: omega size must be >= 1");
    if (spec.p_min < 0.0 || spec.p_max > 1.0 || spec.p_min > spec.p_max)
        throw ValidationError("gen_instance: invalid p range");
    if (spec.label_prior < 0.0 || spec.label_prior > 1.0)
        throw ValidationError("gen_instance: invalid label prior");

    Rng rng(spec.seed);
    std::vector<double> p_plus(n);
    for (int j = 0; j < n; ++j) p_plus[j] = rng.uniform(spec.p_min, spec.p_max);

    std::vector<Outcome> omega;
    const int base = spec.omega_size;
    const double unit = spec.class_balanced ? 1.0 / (2.0 * base) : 1.0 / base;
    for (int a = 0; a < base; ++a) {
        Outcome o;
        o.weight = unit;
        o.label = rng.bernoulli(spec.label_prior) ? 1 : -1;
        o.preds.resize(n);
        for (int j = 0; j < n; ++j) o.preds[j] = rng.bernoulli(p_plus[j]) ? 1 : -1;
        if (spec.class_balanced) {
            Outcome mirror;
            mirror.weight = unit;
            mirror.label = -o.label;
            mirror.preds.resize(n);
            for (int j = 0; j < n; ++j) mirror.preds[j] = -o.preds[j];
            omega.push_back(o);
            omega.push_back(std::move(mirror));
        } else {
            omega.push_back(std::move(o));
        }
    }
    return Instance(wbar, std::move(omega));
}

Instance gen_group_instance(const InfluenceMatrix& wbar, const GroupStructure& group,
                            int omega_size, double label_prior, std::uint64_t seed) {
    const int n = wbar.size();
    group.validate(n);
    if (omega_size < 1) throw ValidationError("gen_group_instance: omega size must be >= 1");

    Rng rng(seed);
    std::vector<Outcome> omega;
    for (int a = 0; a < omega_size; ++a) {
        Outcome o;
        o.weight = 1.0 / omega_size;
        o.label = rng.bernoulli(label_prior) ? 1 : -1;
        o.preds.resize(n);
        const bool group_mode = rng.bernoulli(group.rho);
        int red_pred = 0;
        if (group_mode) {
            const bool red_wrong = rng.bernoulli(group.err_red);
            red_pred = red_wrong ? -o.label : o.label;
        }
        for (int j = 0; j < n; ++j) {
            if (group_mode && group.color[j] == Color::Red) {
                o.preds[j] = static_cast<std::int8_t>(red_pred);
            } else if (group_mode && group.color[j] == Color::Blue) {
                o.preds[j] = static_cast<std::int8_t>(-red_pred);
            } else {
                const bool wrong = rng.bernoulli(group.err_indv[j]);
                o.preds[j] = static_cast<std::int8_t>(wrong ? -o.label : o.label);
            }
        }
        omega.push_back(std::move(o));
    }
    return Instance(wbar, std::move(omega));
}

Instance adversarial_fixture(int n, int variant) {
    if (n < 1) throw ValidationError("fixture: n must be >= 1");
    if (variant != 1 && variant != 2) throw ValidationError("fixture: variant must be 1 or 2");
    const int total = 4 + 2 * n;

    // Listeners v_1..v_n hear u1, u2; v_{n+1}..v_{2n} hear u3, u4. Self-loops
    // everywhere; the hub agents hear nobody else.
    Matrix w = Matrix::Zero(total, total);
    for (int i = 0; i < total; ++i) w(i, i) = 1.0;
    for (int j = 0; j < n; ++j) {
        w(4 + j, 0) = 1.0;
        w(4 + j, 1) = 1.0;
        w(4 + n + j, 2) = 1.0;
        w(4 + n + j, 3) = 1.0;
    }

    // Four equiprobable outcomes from the two independent coin pairs; all
    // listeners always predict the (positive) label correctly.
    std::vector<Outcome> omega;
    for (int c1 : {1, -1})
        for (int c2 : {1, -1}) {
            Outcome o;
            o.weight = 0.25;
            o.label = 1;
            o.preds.assign(total, 1);
            if (variant == 1) {
                o.preds[0] = static_cast<std::int8_t>(c1);
                o.preds[1] = static_cast<std::int8_t>(-c1);
                o.preds[2] = static_cast<std::int8_t>(c2);
                o.preds[3] = static_cast<std::int8_t>(c2);
            } else {
                o.preds[0] = static_cast<std::int8_t>(c1);
                o.preds[1] = static_cast<std::int8_t>(c1);
                o.preds[2] = static_cast<std::int8_t>(c2);
                o.preds[3] = static_cast<std::int8_t>(-c2);
            }
            omega.push_back(std::move(o));
        }
    return Instance(InfluenceMatrix(std::move(w)), std::move(omega));
}

Matrix load_edge_list(const std::string& path, int index_base) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open edge list: " + path);

    struct Edge {
        long u, v;
        double w;
    };
    std::vector<Edge> edges;
    long min_idx = std::numeric_limits<long>::max();
    long max_idx = -1;
    std::string line;
    while (std::getline(in, line)) {
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ss(line);
        long u, v;
        if (!(ss >> u >> v)) continue; // blank or comment line
        double w = 1.0;
        ss >> w;
        if (u < 0 || v < 0) throw ValidationError("edge list: negative index");
        edges.push_back({u, v, w});
        min_idx = std::min(min_idx, std::min(u, v));
        max_idx = std::max(max_idx, std::max(u, v));
    }
    if (edges.empty()) throw ValidationError("edge list: no edges in " + path);

    int base = index_base;
    if (base == -1) base = (min_idx >= 1) ? 1 : 0;
    if (base != 0 && base != 1) throw ValidationError("edge list: index base must be 0 or 1");
    if (min_idx < base) throw ValidationError("edge list: index below declared base");

    const long n = max_idx - base + 1;
    Matrix w = Matrix::Zero(n, n);
    for (const Edge& e : edges) {
        const long u = e.u - base, v = e.v - base;
        if (u == v) continue; // drop self-loops
        w(u, v) = e.w;
        w(v, u) = e.w;
    }
    return w;
}

} // namespace coopnet
