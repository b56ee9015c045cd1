#include "ifsquad/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "ifsquad/summation.hpp"

namespace ifsq {

namespace {

constexpr std::size_t kMaxPartitionSize = 1u << 22;

// Child diameters are produced by the same multiplication chain used to
// derive level parameters, so level-based studies hit the ties exactly.
void descend(const Attractor& a, VecIndex& cur, double cur_diam, double h, std::vector<VecIndex>& out) {
    if (cur_diam <= h) {
        out.push_back(cur);
        return;
    }
    if (out.size() >= kMaxPartitionSize)
        throw std::runtime_error("partition_lh: partition exceeds the size cap");
    for (int m = 1; m <= a.map_count(); ++m) {
        cur.push_back(m);
        descend(a, cur, cur_diam * a.map(m).ratio(), h, out);
        cur.pop_back();
    }
}

}  // namespace

Partition partition_lh(const Attractor& a, double h) { return partition_lh(a, h, VecIndex{}); }

Partition partition_lh(const Attractor& a, double h, const VecIndex& root) {
    if (!(h > 0.0)) throw std::invalid_argument("partition_lh: h must be positive");
    validate_index(a, root);
    double root_diam = a.diam;
    for (int m : root) root_diam *= a.map(m).ratio();

    Partition p;
    p.attractor = a;
    p.h = h;
    p.root = root;
    VecIndex cur = root;
    descend(a, cur, root_diam, h, p.indices);
    return p;
}

Vec barycentre(const Attractor& a) {
    Mat B = a.ambient_dim == 1 ? Mat::scalar(0.0) : Mat::of(0.0, 0.0, 0.0, 0.0);
    Vec rhs = Vec::zero(a.ambient_dim);
    for (const Similarity& s : a.maps) {
        const double rd = std::pow(s.ratio(), a.dim);
        rhs = rhs + s.translation() * rd;
        const double w = rd * s.ratio();
        if (a.ambient_dim == 1) {
            B = Mat::scalar(B(0, 0) + w * s.rotation()(0, 0));
        } else {
            B = Mat::of(B(0, 0) + w * s.rotation()(0, 0), B(0, 1) + w * s.rotation()(0, 1),
                        B(1, 0) + w * s.rotation()(1, 0), B(1, 1) + w * s.rotation()(1, 1));
        }
    }
    return solve_contraction(B, rhs);
}

double QuadratureRule::weight_sum() const {
    KahanSum s;
    for (double w : weights) s.add(w);
    return s.value();
}

QuadratureRule rule_from_partition(const Partition& p) {
    const Attractor& a = p.attractor;
    const Vec xg = barycentre(a);

    QuadratureRule rule;
    rule.h = p.h;
    rule.nodes.reserve(p.size());
    rule.weights.reserve(p.size());
    for (const VecIndex& idx : p.indices) {
        const Similarity s = compose(a, idx);
        rule.nodes.push_back(s(xg));
        rule.weights.push_back(std::pow(s.ratio(), a.dim) * a.measure);
    }
    return rule;
}

double level_parameter(const Attractor& a, int ell) {
    if (ell < 0) throw std::invalid_argument("level_parameter: level must be nonnegative");
    double rho_max = 0.0;
    for (const Similarity& s : a.maps) rho_max = std::max(rho_max, s.ratio());
    double h = a.diam;
    for (int i = 0; i < ell; ++i) h *= rho_max;
    return h;
}

}  // namespace ifsq
