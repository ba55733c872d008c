#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coopnet/approx_group.hpp"
#include "coopnet/instance.hpp"
#include "coopnet/matrix.hpp"

namespace coopnet {

enum class GraphModel { ER, PA, WS, RandomW };

struct GraphSpec {
    GraphModel model = GraphModel::ER;
    int n = 128;
    std::uint64_t seed = 0;
    double p = 0.005;        // ER edge probability
    int m = 5;               // PA attachments per new node
    int k_ring = 5;          // WS ring neighbors (floor(k/2) per side)
    double p_rewire = 0.25;  // WS rewire probability
    double sparsity = 0.95;  // RandomW target zero fraction
    bool row_normalize = true;
};

/// ER/PA/WS emit symmetric 0/1 adjacency with zero diagonal; RandomW emits a
/// row-normalized non-negative matrix usable as Wbar directly. Bit-identical
/// output for a given spec and seed.
Matrix gen_graph(const GraphSpec& spec);

struct InstanceSpec {
    int omega_size = 3;
    double p_min = 0.3; // per-agent Bernoulli(+1) probability range
    double p_max = 0.9;
    double label_prior = 0.5;
    bool class_balanced = false; // mirror outcomes so err_pos == err_neg exactly
    std::uint64_t seed = 0;
};

/// Uniform-weight outcome table: labels from the prior, yhat_i(a) = +1 with
/// per-agent probability p_i ~ U[p_min, p_max]. Class-balanced mode emits
/// each sampled outcome together with its label/prediction mirror image.
Instance gen_instance(const InfluenceMatrix& wbar, const InstanceSpec& spec);

/// Outcome table realizing the group-dependence model: per outcome, with
/// probability rho the colored agents follow opposing group classifiers
/// (red one wrong with probability err_R) and whites act individually; with
/// probability 1-rho everyone acts individually.
Instance gen_group_instance(const InfluenceMatrix& wbar, const GroupStructure& group,
                            int omega_size, double label_prior, std::uint64_t seed);

/// The counterexample pair showing that error rates alone cannot identify a
/// good intervention: two instances with byte-identical Wbar and error rates
/// whose optimal single choices are disjoint. Agents u1..u4 occupy indices
/// 0..3, the 2n listener agents follow. Variant 1 anticorrelates (u1,u2) and
/// correlates (u3,u4); variant 2 swaps the roles.
Instance adversarial_fixture(int n, int variant);

/// Whitespace/comma edge list "u v [w]". index_base: 0, 1, or -1 for
/// autodetect (1-based iff no zero index occurs). Returns symmetric weights.
Matrix load_edge_list(const std::string& path, int index_base);

} // namespace coopnet
