#pragma once

#include <cstddef>
#include <vector>

#include "ifsquad/ifs.hpp"
#include "ifsquad/vec.hpp"

namespace ifsq {

/// The diameter-graded index set L_h: maximal sub-components of diameter at
/// most h. Indices are stored in lexicographic order.
struct Partition {
    Attractor attractor;
    double h = 0.0;
    VecIndex root;  // non-empty when the partition covers a sub-component only
    std::vector<VecIndex> indices;

    std::size_t size() const { return indices.size(); }
};

/// Splits any component of diameter > h into its children, starting from the
/// whole attractor; h >= diam yields the single empty index.
Partition partition_lh(const Attractor& a, double h);

/// Same descent restricted to the subtree below root (the partition of the
/// addressed sub-component).
Partition partition_lh(const Attractor& a, double h, const VecIndex& root);

/// Barycentre of the attractor with respect to its self-similar measure,
/// from the linear system (I - sum_m ratio_m^{d+1} A_m) x = sum_m ratio_m^d delta_m.
Vec barycentre(const Attractor& a);

/// Nodes and weights of the composite one-point rule on a partition:
/// node s_m(barycentre), weight = sub-component measure.
struct QuadratureRule {
    std::vector<Vec> nodes;
    std::vector<double> weights;
    double h = 0.0;

    std::size_t size() const { return nodes.size(); }
    double weight_sum() const;
};

QuadratureRule rule_from_partition(const Partition& p);

/// Partition parameter realizing the fixed-level index set I_ell for uniform
/// attractors (h = diam * ratio^ell, accumulated multiplicatively so the
/// descent reproduces exactly level ell); for non-uniform attractors the
/// largest ratio is used.
double level_parameter(const Attractor& a, int ell);

}  // namespace ifsq
