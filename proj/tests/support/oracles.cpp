#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include "coopnet/rng.hpp"

namespace coopnet::oracle {

namespace {

void check_guard(std::size_t free_count, std::size_t limit, const char* who) {
    if (free_count > limit)
        throw CombinatorialBlowup(std::string(who) + ": enumeration guard exceeded");
}

bool contains(const std::vector<int>& xs, int v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

// Probability over independent correctness coins of the free agents that
// base + sum_j w_j c_j < 0, where P(c_j = -1) = err_j.
double tail_below_zero(const std::vector<double>& w, const std::vector<double>& err,
                       double base) {
    const std::size_t f = w.size();
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << f); ++mask) {
        double z = base;
        double p = 1.0;
        for (std::size_t j = 0; j < f; ++j) {
            if (mask & (1ULL << j)) { // wrong
                z -= w[j];
                p *= err[j];
            } else {
                z += w[j];
                p *= 1.0 - err[j];
            }
        }
        if (z < 0.0) total += p;
    }
    return total;
}

} // namespace

double delta_gain_ind(const Matrix& wbar, const std::vector<double>& err,
                      const std::vector<int>& selected, int u, int i, double prior) {
    const int n = static_cast<int>(wbar.rows());
    if (n > 20) throw CombinatorialBlowup("delta_gain_ind oracle: n > 20");
    if (contains(selected, u)) throw ValidationError("oracle: u in S");

    // Selected neighbors of i must be correct, u must be wrong; everything
    // else with nonzero weight in row i is enumerated.
    double shape = err[u];
    double base = 0.0;
    std::vector<double> free_w, free_e;
    for (int j = 0; j < n; ++j) {
        const double w = wbar(i, j);
        if (j == u) {
            base -= w; // wrong by conditioning (w may be 0)
            continue;
        }
        if (contains(selected, j) && w != 0.0) {
            shape *= 1.0 - err[j];
            base += w;
            continue;
        }
        if (w != 0.0) {
            free_w.push_back(w);
            free_e.push_back(err[j]);
        }
    }
    check_guard(free_w.size(), 20, "delta_gain_ind oracle");
    const double cond = tail_below_zero(free_w, free_e, base);
    // label-independent errors make both label branches identical
    return (prior + (1.0 - prior)) * shape * cond;
}

double egal_gain_ind(const Matrix& wbar, const std::vector<double>& err,
                     const std::vector<int>& selected, double prior) {
    const int n = static_cast<int>(wbar.rows());
    if (n > 20) throw CombinatorialBlowup("egal_gain_ind oracle: n > 20");
    (void)prior;

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        std::vector<double> w;
        std::vector<double> e;
        std::vector<bool> covering;
        for (int j = 0; j < n; ++j) {
            if (wbar(i, j) == 0.0) continue;
            w.push_back(wbar(i, j));
            e.push_back(err[j]);
            covering.push_back(contains(selected, j));
        }
        check_guard(w.size(), 20, "egal_gain_ind oracle");
        double p_i = 0.0;
        for (std::uint64_t mask = 0; mask < (1ULL << w.size()); ++mask) {
            double z = 0.0, p = 1.0;
            bool covered = false;
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (mask & (1ULL << j)) {
                    z -= w[j];
                    p *= e[j];
                    if (covering[j]) covered = true;
                } else {
                    z += w[j];
                    p *= 1.0 - e[j];
                }
            }
            if (covered && z < 0.0) p_i += p;
        }
        total += p_i;
    }
    return total;
}

std::pair<std::vector<int>, double> opt_egal_ind(const Matrix& wbar,
                                                 const std::vector<double>& err, int k,
                                                 double prior) {
    const int n = static_cast<int>(wbar.rows());
    double combos = 1.0;
    for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
    if (combos > 1e5) throw CombinatorialBlowup("opt_egal_ind: too many subsets");

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    std::vector<int> best;
    double best_gain = -1.0;
    while (true) {
        const double g = egal_gain_ind(wbar, err, subset, prior);
        if (g > best_gain) {
            best_gain = g;
            best = subset;
        }
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return {best, best_gain};
}

namespace {

// Group-branch probability of the marginal-gain event for row i. Enumerates
// the red group coin and the free white agents.
double group_branch_event(const Matrix& wbar, const GroupStructure& group,
                          const std::vector<int>& selected, int u, int i) {
    const int n = static_cast<int>(wbar.rows());

    // Constraints on the red-group correctness sign induced by S_i and u.
    bool need_red_correct = false, need_red_wrong = false;
    double shape = 1.0; // probability of the white-agent constraints
    double base_white = 0.0;
    std::vector<double> free_w, free_e;

    if (group.color[u] == Color::Red) need_red_wrong = true;
    if (group.color[u] == Color::Blue) need_red_correct = true; // blue wrong <=> red correct
    if (group.color[u] == Color::White) shape *= group.err_indv[u];

    for (int j = 0; j < n; ++j) {
        const double w = wbar(i, j);
        const bool sel_neighbor = w != 0.0 && contains(selected, j);
        switch (group.color[j]) {
            case Color::Red:
            case Color::Blue:
                if (sel_neighbor) {
                    if (group.color[j] == Color::Red)
                        need_red_correct = true;
                    else
                        need_red_wrong = true;
                }
                break; // colored contributions handled via the group coin below
            case Color::White:
                if (j == u) {
                    base_white -= w;
                } else if (sel_neighbor) {
                    shape *= 1.0 - group.err_indv[j];
                    base_white += w;
                } else if (w != 0.0) {
                    free_w.push_back(w);
                    free_e.push_back(group.err_indv[j]);
                }
                break;
        }
    }
    if (need_red_correct && need_red_wrong) return 0.0;

    double mass_red = 0.0, mass_blue = 0.0;
    for (int j = 0; j < n; ++j) {
        if (group.color[j] == Color::Red) mass_red += wbar(i, j);
        if (group.color[j] == Color::Blue) mass_blue += wbar(i, j);
    }

    check_guard(free_w.size(), 18, "delta_gain_group oracle");
    double total = 0.0;
    for (int red_correct = 0; red_correct <= 1; ++red_correct) {
        if (red_correct && need_red_wrong) continue;
        if (!red_correct && need_red_correct) continue;
        const double p_coin = red_correct ? 1.0 - group.err_red : group.err_red;
        const double sign = red_correct ? 1.0 : -1.0;
        const double base = base_white + sign * (mass_red - mass_blue);
        total += p_coin * tail_below_zero(free_w, free_e, base);
    }
    return shape * total;
}

} // namespace

double delta_gain_group(const Matrix& wbar, const GroupStructure& group,
                        const std::vector<int>& selected, int u, int i, double prior) {
    if (contains(selected, u)) throw ValidationError("group oracle: u in S");
    const double e_gr = group_branch_event(wbar, group, selected, u, i);
    const double e_ind = delta_gain_ind(wbar, group.err_indv, selected, u, i, prior);
    return group.rho * e_gr + (1.0 - group.rho) * e_ind;
}

double egal_gain_group(const Matrix& wbar, const GroupStructure& group,
                       const std::vector<int>& selected, double prior) {
    const int n = static_cast<int>(wbar.rows());

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        // group branch: coverage needs some selected neighbor wrong
        double p_group = 0.0;
        {
            std::vector<double> w, e;
            std::vector<bool> covering;
            double mass_red = 0.0, mass_blue = 0.0;
            bool red_covers = false, blue_covers = false;
            for (int j = 0; j < n; ++j) {
                const double wij = wbar(i, j);
                switch (group.color[j]) {
                    case Color::Red:
                        mass_red += wij;
                        if (wij != 0.0 && contains(selected, j)) red_covers = true;
                        break;
                    case Color::Blue:
                        mass_blue += wij;
                        if (wij != 0.0 && contains(selected, j)) blue_covers = true;
                        break;
                    case Color::White:
                        if (wij != 0.0) {
                            w.push_back(wij);
                            e.push_back(group.err_indv[j]);
                            covering.push_back(contains(selected, j));
                        }
                        break;
                }
            }
            check_guard(w.size(), 18, "egal_gain_group oracle");
            for (int red_correct = 0; red_correct <= 1; ++red_correct) {
                const double p_coin = red_correct ? 1.0 - group.err_red : group.err_red;
                const double sign = red_correct ? 1.0 : -1.0;
                // a covering colored agent must be wrong under this coin
                const bool colored_cover =
                    (red_covers && !red_correct) || (blue_covers && red_correct);
                const double base = sign * (mass_red - mass_blue);
                for (std::uint64_t mask = 0; mask < (1ULL << w.size()); ++mask) {
                    double z = base, p = 1.0;
                    bool covered = colored_cover;
                    for (std::size_t j = 0; j < w.size(); ++j) {
                        if (mask & (1ULL << j)) {
                            z -= w[j];
                            p *= e[j];
                            if (covering[j]) covered = true;
                        } else {
                            z += w[j];
                            p *= 1.0 - e[j];
                        }
                    }
                    if (covered && z < 0.0) p_group += p_coin * p;
                }
            }
        }
        total += group.rho * p_group;
    }
    total += (1.0 - group.rho) * egal_gain_ind(wbar, group.err_indv, selected, prior);
    return total;
}

std::pair<std::vector<int>, double> opt_egal_group(const Matrix& wbar,
                                                   const GroupStructure& group, int k,
                                                   double prior) {
    const int n = static_cast<int>(wbar.rows());
    double combos = 1.0;
    for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
    if (combos > 1e5) throw CombinatorialBlowup("opt_egal_group: too many subsets");

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    std::vector<int> best;
    double best_gain = -1.0;
    while (true) {
        const double g = egal_gain_group(wbar, group, subset, prior);
        if (g > best_gain) {
            best_gain = g;
            best = subset;
        }
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return {best, best_gain};
}

double mc_delta_gain_ind(const Matrix& wbar, const std::vector<double>& err,
                         const std::vector<int>& selected, int u, int i, long samples,
                         std::uint64_t seed) {
    const int n = static_cast<int>(wbar.rows());
    Rng rng(seed);
    long hits = 0;
    std::vector<double> c(n);
    for (long s = 0; s < samples; ++s) {
        for (int j = 0; j < n; ++j) c[j] = rng.bernoulli(err[j]) ? -1.0 : 1.0;
        if (c[u] != -1.0) continue;
        bool sel_ok = true;
        for (int j : selected)
            if (wbar(i, j) != 0.0 && c[j] == -1.0) {
                sel_ok = false;
                break;
            }
        if (!sel_ok) continue;
        double z = 0.0;
        for (int j = 0; j < n; ++j) z += wbar(i, j) * c[j];
        if (z < 0.0) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

double mc_delta_gain_group(const Matrix& wbar, const GroupStructure& group,
                           const std::vector<int>& selected, int u, int i, long samples,
                           std::uint64_t seed) {
    const int n = static_cast<int>(wbar.rows());
    Rng rng(seed);
    long hits = 0;
    std::vector<double> c(n);
    for (long s = 0; s < samples; ++s) {
        const bool group_mode = rng.bernoulli(group.rho);
        double red_sign = 0.0;
        if (group_mode) red_sign = rng.bernoulli(group.err_red) ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) {
            if (group_mode && group.color[j] == Color::Red)
                c[j] = red_sign;
            else if (group_mode && group.color[j] == Color::Blue)
                c[j] = -red_sign;
            else
                c[j] = rng.bernoulli(group.err_indv[j]) ? -1.0 : 1.0;
        }
        if (c[u] != -1.0) continue;
        bool sel_ok = true;
        for (int j : selected)
            if (wbar(i, j) != 0.0 && c[j] == -1.0) {
                sel_ok = false;
                break;
            }
        if (!sel_ok) continue;
        double z = 0.0;
        for (int j = 0; j < n; ++j) z += wbar(i, j) * c[j];
        if (z < 0.0) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

Instance sample_instance_from_errors(const InfluenceMatrix& wbar,
                                     const std::vector<double>& err, int omega_size,
                                     double prior, std::uint64_t seed) {
    const int n = wbar.size();
    Rng rng(seed);
    std::vector<Outcome> omega;
    for (int a = 0; a < omega_size; ++a) {
        Outcome o;
        o.weight = 1.0 / omega_size;
        o.label = rng.bernoulli(prior) ? 1 : -1;
        o.preds.resize(n);
        for (int j = 0; j < n; ++j) {
            const bool wrong = rng.bernoulli(err[j]);
            o.preds[j] = static_cast<std::int8_t>(wrong ? -o.label : o.label);
        }
        omega.push_back(std::move(o));
    }
    return Instance(wbar, std::move(omega));
}

} // namespace coopnet::oracle
