#include "ifsquad/ifs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ifsquad/geometry.hpp"

namespace ifsq {

Similarity::Similarity(double ratio, const Mat& rotation, const Vec& translation)
    : ratio_(ratio), rotation_(rotation), translation_(translation) {
    if (rotation.dim() != translation.dim())
        throw std::invalid_argument("Similarity: rotation/translation dimension mismatch");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("Similarity: contraction ratio must lie in (0,1)");
    if (!rotation.is_orthogonal(kOrthogonalityTol))
        throw std::invalid_argument("Similarity: rotation matrix is not orthogonal");
}

Similarity Similarity::identity(int n) {
    if (n != 1 && n != 2) throw std::invalid_argument("Similarity::identity: dimension must be 1 or 2");
    return Similarity(unchecked_t{}, 1.0, Mat::identity(n), Vec::zero(n), true);
}

Vec Similarity::fixed_point() const {
    if (identity_) throw std::invalid_argument("fixed_point: identity map has no unique fixed point");
    // (I - rho A) is invertible because rho < 1 and ||A||_2 = 1.
    Mat B = rotation_;
    Mat scaled = (dim() == 1) ? Mat::scalar(ratio_ * B(0, 0))
                              : Mat::of(ratio_ * B(0, 0), ratio_ * B(0, 1), ratio_ * B(1, 0), ratio_ * B(1, 1));
    return solve_contraction(scaled, translation_);
}

Similarity similarity1(double ratio, double shift, double sign) {
    return Similarity(ratio, Mat::scalar(sign), Vec(shift));
}

Similarity similarity2(double ratio, double angle, double dx, double dy, bool reflect) {
    return Similarity(ratio, reflect ? Mat::reflection(angle) : Mat::rotation(angle), Vec(dx, dy));
}

Similarity compose(const Similarity& outer, const Similarity& inner) {
    if (outer.dim() != inner.dim()) throw std::invalid_argument("compose: dimension mismatch");
    if (outer.is_identity()) return inner;
    if (inner.is_identity()) return outer;
    const double ratio = outer.ratio() * inner.ratio();
    const Mat rot = outer.rotation().mul(inner.rotation());
    const Vec trans = outer.rotation().apply(inner.translation()) * outer.ratio() + outer.translation();
    return Similarity(Similarity::unchecked_t{}, ratio, rot, trans, false);
}

double solve_dimension(const std::vector<double>& ratios) {
    if (ratios.size() < 2) throw std::invalid_argument("solve_dimension: need at least 2 ratios");
    for (double r : ratios)
        if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("solve_dimension: ratios must lie in (0,1)");

    auto residual = [&](double d) {
        double s = 0.0;
        for (double r : ratios) s += std::pow(r, d);
        return s - 1.0;
    };

    // residual(0) = M - 1 > 0 and the residual is strictly decreasing.
    double lo = 0.0, hi = 1.0;
    while (residual(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw std::invalid_argument("solve_dimension: no root below 1e6");
    }
    while (hi - lo > 1e-15 * (1.0 + hi)) {
        const double mid = 0.5 * (lo + hi);
        (residual(mid) > 0.0 ? lo : hi) = mid;
    }
    double d = 0.5 * (lo + hi);

    // One Newton polish; F'(d) = sum r^d log r < 0.
    double f = 0.0, fp = 0.0;
    for (double r : ratios) {
        const double p = std::pow(r, d);
        f += p;
        fp += p * std::log(r);
    }
    if (fp != 0.0) d -= (f - 1.0) / fp;
    return d;
}

Attractor make_attractor(std::vector<Similarity> maps, int ambient_dim,
                         std::optional<double> measure_override, std::optional<double> diam_override) {
    if (ambient_dim != 1 && ambient_dim != 2)
        throw std::invalid_argument("make_attractor: ambient dimension must be 1 or 2");
    if (maps.size() < 2) throw std::invalid_argument("make_attractor: need at least 2 maps");
    for (const Similarity& s : maps) {
        if (s.dim() != ambient_dim) throw std::invalid_argument("make_attractor: map dimension mismatch");
        if (s.is_identity()) throw std::invalid_argument("make_attractor: identity map is not a contraction");
    }

    std::vector<double> ratios;
    ratios.reserve(maps.size());
    for (const Similarity& s : maps) ratios.push_back(s.ratio());

    Attractor a;
    a.ambient_dim = ambient_dim;
    a.maps = std::move(maps);
    a.dim = solve_dimension(ratios);
    if (a.dim > ambient_dim + 1e-12)
        throw std::invalid_argument("make_attractor: solved dimension " + std::to_string(a.dim) +
                                    " exceeds ambient dimension");

    if (measure_override) {
        if (!(*measure_override > 0.0)) throw std::invalid_argument("make_attractor: measure must be positive");
        a.measure = *measure_override;
    } else {
        a.measure = 1.0;
    }

    if (diam_override) {
        if (!(*diam_override > 0.0)) throw std::invalid_argument("make_attractor: diameter must be positive");
        a.diam = *diam_override;
        a.diam_provenance = DiamProvenance::exact_user_supplied;
    } else {
        // Converged inner hull; its defect bound is available via hull_approx.
        Vec eta0 = a.maps.front().fixed_point();
        double spread = 0.0;
        for (const Similarity& s : a.maps) spread = std::max(spread, dist(s.fixed_point(), eta0));
        if (!(spread > 0.0))
            throw std::invalid_argument("make_attractor: degenerate attractor (zero diameter)");
        a.diam = hull_of_maps(a.maps, ambient_dim, 1e-12 * spread).hull.diameter();
        a.diam_provenance = DiamProvenance::hull_approximated;
    }
    return a;
}

bool is_uniform(const Attractor& a, double tol) {
    const double r0 = a.maps.front().ratio();
    for (const Similarity& s : a.maps)
        if (std::abs(s.ratio() - r0) > tol) return false;
    return true;
}

void validate_index(const Attractor& a, const VecIndex& index) {
    for (int m : index)
        if (m < 1 || m > a.map_count())
            throw std::invalid_argument("index entry " + std::to_string(m) + " out of range 1.." +
                                        std::to_string(a.map_count()));
}

Similarity compose(const Attractor& a, const VecIndex& index) {
    validate_index(a, index);
    Similarity s = Similarity::identity(a.ambient_dim);
    for (int m : index) s = compose(s, a.map(m));
    return s;
}

SubComponent subcomponent(const Attractor& a, const VecIndex& index) {
    validate_index(a, index);
    SubComponent sc;
    sc.index = index;
    sc.map = compose(a, index);
    sc.parent = &a;
    double log_scale = 0.0;
    for (int m : index) log_scale += std::log(a.map(m).ratio());
    sc.diam = std::exp(log_scale) * a.diam;
    sc.measure = std::exp(a.dim * log_scale) * a.measure;
    return sc;
}

}  // namespace ifsq
