#include "ifsquad/kernel_helmholtz.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "ifsquad/geometry.hpp"

namespace ifsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606065121;
constexpr double kNearDiagonal = 1e-6;  // switch to the series branch below this k*r

Complex unit_phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

void report_precondition(const std::string& what, const SingularOptions& opts) {
    if (opts.strict) throw std::domain_error(what);
    std::cerr << "ifsquad: warning: " << what << "\n";
}

}  // namespace

Complex phi(const HelmholtzKernel& ker, const Vec& x, const Vec& y) {
    const double r = dist(x, y);
    if (r == 0.0) throw std::invalid_argument("phi: evaluation at the singular point x = y");
    if (ker.screen_dim == 1) return Complex(0.0, 0.25) * hankel1_0(ker.wavenumber * r);
    return unit_phase(ker.wavenumber * r) / (4.0 * kPi * r);
}

Complex phi_star(const HelmholtzKernel& ker, const Vec& x, const Vec& y) {
    const double k = ker.wavenumber;
    const double r = dist(x, y);
    const double kr = k * r;

    if (ker.screen_dim == 2) {
        if (r == 0.0) return {0.0, k / (4.0 * kPi)};
        // (e^{ikr} - 1) / (4 pi r) with the real part as -2 sin^2(kr/2).
        const double s = std::sin(0.5 * kr);
        return {-2.0 * s * s / (4.0 * kPi * r), std::sin(kr) / (4.0 * kPi * r)};
    }

    if (r == 0.0) return {(-std::log(0.5 * k) - kEulerGamma) / (2.0 * kPi), 0.25};
    if (kr < kNearDiagonal) {
        // i/4 J0 - (1/2pi)[ln(r)(J0-1) + (ln(k/2)+gamma) J0 + S], with
        // J0 - 1 and the harmonic sum S from two series terms (q <= 2.5e-13).
        const double q = 0.25 * kr * kr;
        const double j0m1 = -q * (1.0 - 0.25 * q);
        const double j0 = 1.0 + j0m1;
        const double s_sum = q * (1.0 - 0.375 * q);
        const double re = -(std::log(r) * j0m1 + (std::log(0.5 * k) + kEulerGamma) * j0 + s_sum) / (2.0 * kPi);
        return {re, 0.25 * j0};
    }
    const Complex h0 = hankel1_0(kr);
    return Complex(0.0, 0.25) * h0 + std::log(r) / (2.0 * kPi);
}

namespace {

/// Warn when the scale-h hull neighbourhoods of two attractors cannot be
/// certified disjoint.
void check_pair_disjoint(const Attractor& a1, const Attractor& a2, double h, const SingularOptions& opts) {
    const ApproxHull h1 = hull_approx(a1, 1e-8 * a1.diam);
    const ApproxHull h2 = hull_approx(a2, 1e-8 * a2.diam);
    if (hull_distance(h1.hull, h2.hull) > 0.0) return;  // parent hulls disjoint: certainly fine
    const Partition p1 = partition_lh(a1, h);
    const Partition p2 = partition_lh(a2, h);
    if (p1.size() * p2.size() > 4'000'000) {
        report_precondition("could not verify hull-disjointness of the two scale-h hull sets", opts);
        return;
    }
    std::vector<ConvexHull> hulls2;
    hulls2.reserve(p2.size());
    for (const VecIndex& idx : p2.indices) hulls2.push_back(h2.hull.transformed(compose(a2, idx)));
    for (const VecIndex& idx : p1.indices) {
        const ConvexHull lhs = h1.hull.transformed(compose(a1, idx));
        for (const ConvexHull& rhs : hulls2)
            if (hull_distance(lhs, rhs) == 0.0) {
                report_precondition("scale-h hull sets of the two attractors intersect; the regular-rule "
                                    "error estimate does not apply",
                                    opts);
                return;
            }
    }
}

}  // namespace

Complex integrate_helmholtz_double(const Attractor& a1, const Attractor& a2, const HelmholtzKernel& ker,
                                   double h, const SingularOptions& opts) {
    if (a1.ambient_dim != ker.screen_dim || a2.ambient_dim != ker.screen_dim)
        throw std::invalid_argument("integrate_helmholtz_double: kernel/attractor dimension mismatch");
    if (!(h > 0.0)) throw std::invalid_argument("integrate_helmholtz_double: h must be positive");
    check_pair_disjoint(a1, a2, h, opts);
    const QuadratureRule r1 = rule_from_partition(partition_lh(a1, h));
    const QuadratureRule r2 = rule_from_partition(partition_lh(a2, h));
    return detail::pair_rule_sum<Complex>(r1, r2, [&](const Vec& x, const Vec& y) { return phi(ker, x, y); });
}

Complex integrate_helmholtz_singular(const Attractor& a, const HelmholtzKernel& ker, double h,
                                     const SingularOptions& opts) {
    if (a.ambient_dim != ker.screen_dim)
        throw std::invalid_argument("integrate_helmholtz_singular: kernel/attractor dimension mismatch");
    const int n = ker.screen_dim;
    if (!(a.dim > n - 1))
        throw std::domain_error("integrate_helmholtz_singular: requires dim > n-1 for the matching "
                                "singular kernel to be integrable");
    if (!(h > 0.0)) throw std::invalid_argument("integrate_helmholtz_singular: h must be positive");

    const double cn = splitting_constant(n);
    const double t = static_cast<double>(n - 1);
    auto star = [&](const Vec& x, const Vec& y) { return phi_star(ker, x, y); };

    if (ker.wavenumber * a.diam <= ker.c_osc) {
        if (h > a.diam)
            throw std::invalid_argument("integrate_helmholtz_singular: h exceeds the diameter in the "
                                        "non-oscillatory branch");
        const double singular_part = detail::phi_t_double_block(a, VecIndex{}, t, h, opts);
        const QuadratureRule rule = rule_from_partition(partition_lh(a, h));
        const Complex smooth_part = opts.symmetry_halving
                                        ? detail::symmetric_rule_sum<Complex>(rule, star)
                                        : detail::pair_rule_sum<Complex>(rule, rule, star);
        return cn * singular_part + smooth_part;
    }

    const double hstar = ker.oscillation_cutoff();
    if (h > hstar)
        throw std::invalid_argument("integrate_helmholtz_singular: h exceeds c_osc/k in the oscillatory "
                                    "branch");
    const Partition blocks = partition_lh(a, hstar);
    std::vector<QuadratureRule> rules;
    rules.reserve(blocks.size());
    for (const VecIndex& idx : blocks.indices) rules.push_back(rule_from_partition(partition_lh(a, h, idx)));

    KahanSumComplex total;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        total.add(cn * detail::phi_t_double_block(a, blocks.indices[b], t, h, opts));
        total.add(opts.symmetry_halving ? detail::symmetric_rule_sum<Complex>(rules[b], star)
                                        : detail::pair_rule_sum<Complex>(rules[b], rules[b], star));
    }
    auto kernel = [&](const Vec& x, const Vec& y) { return phi(ker, x, y); };
    if (opts.symmetry_halving) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t b2 = b + 1; b2 < blocks.size(); ++b2)
                total.add(2.0 * detail::pair_rule_sum<Complex>(rules[b], rules[b2], kernel));
    } else {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t b2 = 0; b2 < blocks.size(); ++b2) {
                if (b2 == b) continue;
                total.add(detail::pair_rule_sum<Complex>(rules[b], rules[b2], kernel));
            }
    }
    return total.value();
}

double bound_helmholtz_singular(const Attractor& a, const HelmholtzKernel& ker, double h) {
    const int n = ker.screen_dim;
    if (a.ambient_dim != n)
        throw std::invalid_argument("bound_helmholtz_singular: kernel/attractor dimension mismatch");
    if (!(a.dim > n - 1)) throw std::domain_error("bound_helmholtz_singular: requires dim > n-1");
    const double r_hull = hull_separation_level1(a);
    if (r_hull == 0.0)
        throw std::domain_error("bound_helmholtz_singular: zero level-1 hull separation, predictor "
                                "unavailable");

    const double kd = ker.wavenumber * a.diam;
    const double mu2 = a.measure * a.measure;

    if (is_uniform(a)) {
        const double M = a.map_count();
        const double d = a.dim;
        const double geom = (n == 1) ? 1.0 : 1.0 - std::pow(M, 1.0 / d - 1.0);
        const double core = std::pow(M, (n + 1.0) / d) / std::pow(geom, n - 1.0);
        double c;
        if (kd <= ker.c_osc) {
            c = core / std::pow(r_hull, n + 1.0);
        } else {
            c = (1.0 + core / std::pow(kd, d)) * std::pow(kd / r_hull, n + 1.0);
        }
        return c * h * h * mu2;
    }

    double rho_min = 1.0, sum = 0.0;
    for (const Similarity& s : a.maps) {
        rho_min = std::min(rho_min, s.ratio());
        sum += std::pow(s.ratio(), 2.0 * a.dim - n + 1.0);
    }
    const double denom = std::pow(rho_min, n) * (1.0 - sum);
    double c;
    if (kd <= ker.c_osc) {
        c = 1.0 / (denom * std::pow(r_hull, n));
    } else {
        c = (1.0 + 1.0 / (denom * std::pow(kd, a.dim))) * std::pow(kd / r_hull, n);
    }
    return c * h * mu2;
}

}  // namespace ifsq
