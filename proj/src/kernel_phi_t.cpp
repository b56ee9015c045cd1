#include "ifsquad/kernel_phi_t.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace ifsq {

double phi_t(double t, const Vec& x, const Vec& y) {
    if (t < 0.0) throw std::invalid_argument("phi_t: exponent must be nonnegative");
    const double r = dist(x, y);
    if (r == 0.0) throw std::invalid_argument("phi_t: evaluation at the singular point x = y");
    return t == 0.0 ? std::log(r) : std::pow(r, -t);
}

namespace {

void report_precondition(const std::string& what, const SingularOptions& opts) {
    if (opts.strict) throw std::domain_error(what);
    std::cerr << "ifsquad: warning: " << what << "\n";
}

void require_valid_exponent(const Attractor& a, double t) {
    if (t < 0.0) throw std::invalid_argument("singular rule: exponent must be nonnegative");
    if (t >= a.dim)
        throw std::domain_error("singular rule: divergent integral (requires t < dim, dim = " +
                                std::to_string(a.dim) + ")");
}

/// True when the fixed point of map m may lie in another level-1 component:
/// descends only into components whose hulls contain the point, up to depth.
bool fixed_point_possibly_shared(const Attractor& a, int m, int depth) {
    const ConvexHull base = hull_approx(a, 1e-8 * a.diam).hull;
    const Vec eta = a.map(m).fixed_point();
    const double tol = 1e-9 * a.diam;

    std::vector<VecIndex> frontier;
    for (int mp = 1; mp <= a.map_count(); ++mp) {
        if (mp == m) continue;
        if (base.transformed(a.map(mp)).contains(eta, tol)) frontier.push_back({mp});
    }
    for (int level = 1; level < depth && !frontier.empty(); ++level) {
        std::vector<VecIndex> next;
        for (const VecIndex& idx : frontier) {
            for (int mp = 1; mp <= a.map_count(); ++mp) {
                VecIndex child = idx;
                child.push_back(mp);
                if (base.transformed(compose(a, child)).contains(eta, tol)) next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return !frontier.empty();
}

/// Cheap disjointness probe from level-1 point clouds.
bool components_possibly_touching(const Attractor& a, int depth) {
    std::vector<Vec> cloud;
    for (const Similarity& s : a.maps) cloud.push_back(s.fixed_point());
    for (int k = 1; k < depth; ++k) {
        std::vector<Vec> next;
        next.reserve(cloud.size() * a.maps.size());
        for (const Similarity& s : a.maps)
            for (const Vec& p : cloud) next.push_back(s(p));
        if (next.size() > 2048) break;
        cloud = std::move(next);
    }
    const double tol = 1e-9 * a.diam;
    for (int m = 1; m <= a.map_count(); ++m) {
        for (int m2 = m + 1; m2 <= a.map_count(); ++m2) {
            for (const Vec& p : cloud)
                for (const Vec& q : cloud)
                    if (dist(a.map(m)(p), a.map(m2)(q)) < tol) return true;
        }
    }
    return false;
}

double pow_sum(const Attractor& a, double e) {
    double s = 0.0;
    for (const Similarity& m : a.maps) s += std::pow(m.ratio(), e);
    return s;
}

}  // namespace

double integrate_phi_t_at_fixed_point(const Attractor& a, double t, int m, double h,
                                      const SingularOptions& opts) {
    require_valid_exponent(a, t);
    if (m < 1 || m > a.map_count())
        throw std::invalid_argument("integrate_phi_t_at_fixed_point: map index out of range");
    if (!(h > 0.0)) throw std::invalid_argument("integrate_phi_t_at_fixed_point: h must be positive");
    if (fixed_point_possibly_shared(a, m, opts.check_depth))
        report_precondition("fixed point of map " + std::to_string(m) +
                                " appears to lie in another level-1 component; the reformulation may not apply",
                            opts);

    const Vec eta = a.map(m).fixed_point();
    const double rho = a.map(m).ratio();
    KahanSum total;
    for (int mp = 1; mp <= a.map_count(); ++mp) {
        if (mp == m) continue;
        const QuadratureRule rule = rule_from_partition(partition_lh(a, h, {mp}));
        total.add(detail::single_rule_sum<double>(rule, [&](const Vec& x) { return phi_t(t, x, eta); }));
    }
    if (t == 0.0) {
        const double rho_d = std::pow(rho, a.dim);
        return (a.measure * rho_d * std::log(rho) + total.value()) / (1.0 - rho_d);
    }
    return total.value() / (1.0 - std::pow(rho, a.dim - t));
}

namespace detail {

double phi_t_double_block(const Attractor& a, const VecIndex& root, double t, double h,
                          const SingularOptions& opts) {
    const int M = a.map_count();
    std::vector<QuadratureRule> rules;
    rules.reserve(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) {
        VecIndex child = root;
        child.push_back(m);
        rules.push_back(rule_from_partition(partition_lh(a, h, child)));
    }

    auto kernel = [&](const Vec& x, const Vec& y) { return phi_t(t, x, y); };
    KahanSum offdiag;
    if (opts.symmetry_halving) {
        for (int m = 0; m < M; ++m)
            for (int m2 = m + 1; m2 < M; ++m2)
                offdiag.add(2.0 * pair_rule_sum<double>(rules[static_cast<std::size_t>(m)],
                                                        rules[static_cast<std::size_t>(m2)], kernel));
    } else {
        for (int m = 0; m < M; ++m)
            for (int m2 = 0; m2 < M; ++m2) {
                if (m2 == m) continue;
                offdiag.add(pair_rule_sum<double>(rules[static_cast<std::size_t>(m)],
                                                  rules[static_cast<std::size_t>(m2)], kernel));
            }
    }

    if (t == 0.0) {
        const double mu_root = root.empty() ? a.measure : subcomponent(a, root).measure;
        KahanSum corr;
        for (const Similarity& s : a.maps)
            corr.add(mu_root * mu_root * std::pow(s.ratio(), 2.0 * a.dim) * std::log(s.ratio()));
        return (corr.value() + offdiag.value()) / (1.0 - pow_sum(a, 2.0 * a.dim));
    }
    return offdiag.value() / (1.0 - pow_sum(a, 2.0 * a.dim - t));
}

}  // namespace detail

double integrate_phi_t_double(const Attractor& a, double t, double h, const SingularOptions& opts) {
    require_valid_exponent(a, t);
    if (!(h > 0.0)) throw std::invalid_argument("integrate_phi_t_double: h must be positive");
    if (components_possibly_touching(a, opts.check_depth))
        report_precondition(
            "level-1 components appear to touch; the reformulation's hypotheses do not hold (results are "
            "typically still convergent)",
            opts);
    return detail::phi_t_double_block(a, VecIndex{}, t, h, opts);
}

double bound_phi_t_single(const Attractor& a, double t, int m, double h) {
    require_valid_exponent(a, t);
    if (m < 1 || m > a.map_count()) throw std::invalid_argument("bound_phi_t_single: map index out of range");
    const double r_mh = fixed_point_separation(a, m, h);
    if (r_mh == 0.0)
        throw std::domain_error("bound_phi_t_single: zero fixed-point separation, bound unavailable");
    const double n = a.ambient_dim;
    const double rho = a.map(m).ratio();
    return n * phi_t_hessian_scale(t) * h * h * a.measure /
           (2.0 * (1.0 - std::pow(rho, a.dim - t)) * std::pow(r_mh, t + 2.0));
}

double bound_phi_t_double(const Attractor& a, double t, double h) {
    require_valid_exponent(a, t);
    const double r = hull_separation(a, h);
    if (r == 0.0) throw std::domain_error("bound_phi_t_double: zero hull separation, bound unavailable");
    const double n = a.ambient_dim;
    return 2.0 * n * phi_t_hessian_scale(t) * h * h * a.measure * a.measure /
           ((1.0 - pow_sum(a, 2.0 * a.dim - t)) * std::pow(r, t + 2.0));
}

}  // namespace ifsq
