#include "ifsquad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ifsquad/partition.hpp"

namespace ifsq {

namespace {

double cross(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
    const Vec ab = b - a;
    const double den = ab.dot(ab);
    if (den == 0.0) return dist(p, a);
    double t = (p - a).dot(ab) / den;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + ab * t);
}

int orientation_sign(const Vec& o, const Vec& a, const Vec& b) {
    const double c = cross(o, a, b);
    return (c > 0.0) - (c < 0.0);
}

bool on_segment(const Vec& p, const Vec& a, const Vec& b) {
    return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_intersect(const Vec& p1, const Vec& p2, const Vec& q1, const Vec& q2) {
    const int o1 = orientation_sign(p1, p2, q1);
    const int o2 = orientation_sign(p1, p2, q2);
    const int o3 = orientation_sign(q1, q2, p1);
    const int o4 = orientation_sign(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(q1, p1, p2)) return true;
    if (o2 == 0 && on_segment(q2, p1, p2)) return true;
    if (o3 == 0 && on_segment(p1, q1, q2)) return true;
    if (o4 == 0 && on_segment(p2, q1, q2)) return true;
    return false;
}

double segment_segment_distance(const Vec& p1, const Vec& p2, const Vec& q1, const Vec& q2) {
    if (segments_intersect(p1, p2, q1, q2)) return 0.0;
    return std::min(std::min(point_segment_distance(q1, p1, p2), point_segment_distance(q2, p1, p2)),
                    std::min(point_segment_distance(p1, q1, q2), point_segment_distance(p2, q1, q2)));
}

// Turn test with a scale-relative tolerance, so points that are collinear up
// to rounding do not survive as spurious hull vertices.
bool strict_left_turn(const Vec& o, const Vec& a, const Vec& b) {
    return cross(o, a, b) > 1e-12 * dist(o, a) * dist(a, b);
}

std::vector<Vec> monotone_chain(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) { return a[0] == b[0] && a[1] == b[1]; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && !strict_left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && !strict_left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) {  // all collinear: keep the two extremes
        return {pts.front(), pts.back()};
    }
    return hull;
}

}  // namespace

ConvexHull ConvexHull::interval(double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("ConvexHull::interval: need a <= b");
    return ConvexHull(1, {Vec(a), Vec(b)});
}

ConvexHull ConvexHull::of_points(int dim, std::vector<Vec> points) {
    if (points.empty()) throw std::invalid_argument("ConvexHull::of_points: empty point set");
    if (dim == 1) {
        double lo = points.front()[0], hi = lo;
        for (const Vec& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return ConvexHull(1, {Vec(lo), Vec(hi)});
    }
    if (dim != 2) throw std::invalid_argument("ConvexHull::of_points: dimension must be 1 or 2");
    return ConvexHull(2, monotone_chain(std::move(points)));
}

double ConvexHull::diameter() const {
    if (n_ == 1) return hi() - lo();
    double best = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            best = std::max(best, dist(verts_[i], verts_[j]));
    return best;
}

bool ConvexHull::contains(const Vec& p, double tol) const {
    if (n_ == 1) return p[0] >= lo() - tol && p[0] <= hi() + tol;
    if (verts_.size() == 1) return dist(p, verts_[0]) <= tol;
    if (verts_.size() == 2) return point_segment_distance(p, verts_[0], verts_[1]) <= tol;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Vec& a = verts_[i];
        const Vec& b = verts_[(i + 1) % verts_.size()];
        if (cross(a, b, p) < -tol * (1.0 + dist(a, b))) return false;
    }
    return true;
}

double ConvexHull::distance_to(const Vec& p) const {
    if (n_ == 1) return std::max({0.0, lo() - p[0], p[0] - hi()});
    if (verts_.size() == 1) return dist(p, verts_[0]);
    if (verts_.size() == 2) return point_segment_distance(p, verts_[0], verts_[1]);
    if (contains(p)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verts_.size(); ++i)
        best = std::min(best, point_segment_distance(p, verts_[i], verts_[(i + 1) % verts_.size()]));
    return best;
}

ConvexHull ConvexHull::transformed(const Similarity& s) const {
    if (s.dim() != n_) throw std::invalid_argument("ConvexHull::transformed: dimension mismatch");
    std::vector<Vec> mapped;
    mapped.reserve(verts_.size());
    for (const Vec& v : verts_) mapped.push_back(s(v));
    if (n_ == 1) {
        double a = mapped.front()[0], b = mapped.back()[0];
        if (a > b) std::swap(a, b);
        return ConvexHull(1, {Vec(a), Vec(b)});
    }
    if (s.rotation().det() < 0.0) std::reverse(mapped.begin(), mapped.end());
    return ConvexHull(2, std::move(mapped));
}

double hull_distance(const ConvexHull& h1, const ConvexHull& h2) {
    if (h1.dim() != h2.dim()) throw std::invalid_argument("hull_distance: dimension mismatch");
    if (h1.dim() == 1) return std::max({0.0, h2.lo() - h1.hi(), h1.lo() - h2.hi()});

    const auto& a = h1.vertices();
    const auto& b = h2.vertices();
    if (h1.vertices().size() >= 3)
        for (const Vec& v : b)
            if (h1.contains(v)) return 0.0;
    if (h2.vertices().size() >= 3)
        for (const Vec& v : a)
            if (h2.contains(v)) return 0.0;

    auto edge = [](const std::vector<Vec>& vs, std::size_t i) {
        return std::pair<Vec, Vec>(vs[i], vs[(i + 1) % vs.size()]);
    };
    const std::size_t na = a.size() == 1 ? 1 : a.size();
    const std::size_t nb = b.size() == 1 ? 1 : b.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < na; ++i) {
        const auto [p1, p2] = a.size() == 1 ? std::pair<Vec, Vec>(a[0], a[0]) : edge(a, i);
        for (std::size_t j = 0; j < nb; ++j) {
            const auto [q1, q2] = b.size() == 1 ? std::pair<Vec, Vec>(b[0], b[0]) : edge(b, j);
            best = std::min(best, segment_segment_distance(p1, p2, q1, q2));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

ApproxHull hull_of_maps(const std::vector<Similarity>& maps, int ambient_dim, double tol, int max_level) {
    if (!(tol > 0.0)) throw std::invalid_argument("hull_of_maps: tol must be positive");
    std::vector<Vec> pts;
    pts.reserve(maps.size());
    double rho_max = 0.0;
    for (const Similarity& s : maps) {
        pts.push_back(s.fixed_point());
        rho_max = std::max(rho_max, s.ratio());
    }
    ConvexHull cur = ConvexHull::of_points(ambient_dim, pts);
    for (int level = 1; level <= max_level; ++level) {
        if (cur.vertices().size() * (maps.size() + 1) > 2'000'000)
            throw std::runtime_error("hull_of_maps: hull complexity cap exceeded before reaching tol");
        std::vector<Vec> next_pts = cur.vertices();
        for (const Similarity& s : maps)
            for (const Vec& v : cur.vertices()) next_pts.push_back(s(v));
        ConvexHull next = ConvexHull::of_points(ambient_dim, std::move(next_pts));
        double step = 0.0;
        for (const Vec& v : next.vertices()) step = std::max(step, cur.distance_to(v));
        cur = std::move(next);
        if (step < tol) {
            const double q = std::pow(rho_max, level);
            const double defect = (2.0 * q < 1.0) ? q * cur.diameter() / (1.0 - 2.0 * q)
                                                  : std::numeric_limits<double>::infinity();
            return ApproxHull{std::move(cur), level, defect};
        }
    }
    throw std::runtime_error("hull_of_maps: no convergence to tol within the level cap");
}

ApproxHull hull_approx(const Attractor& a, double tol, int max_level) {
    return hull_of_maps(a.maps, a.ambient_dim, tol, max_level);
}

namespace {

int auto_cloud_depth(int map_count, std::size_t budget) {
    int depth = 1;
    std::size_t pts = static_cast<std::size_t>(map_count);
    while (pts * static_cast<std::size_t>(map_count) <= budget) {
        pts *= static_cast<std::size_t>(map_count);
        ++depth;
    }
    return depth;
}

std::vector<Vec> point_cloud(const Attractor& a, int depth) {
    std::vector<Vec> cloud;
    for (const Similarity& s : a.maps) cloud.push_back(s.fixed_point());
    for (int k = 1; k < depth; ++k) {
        std::vector<Vec> next;
        next.reserve(cloud.size() * a.maps.size());
        for (const Similarity& s : a.maps)
            for (const Vec& p : cloud) next.push_back(s(p));
        cloud = std::move(next);
    }
    return cloud;
}

double min_cloud_distance(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& p : a)
        for (const Vec& q : b) best = std::min(best, dist(p, q));
    return best;
}

double clamp_touching(double v, double tol, bool* touched) {
    if (v < tol) {
        if (touched) *touched = true;
        return 0.0;
    }
    return v;
}

}  // namespace

double SeparationReport::min_r_m_h() const {
    double best = std::numeric_limits<double>::infinity();
    for (double v : r_m_h) best = std::min(best, v);
    return best;
}

double fixed_point_separation(const Attractor& a, int m, double h, const SeparationOptions& opts) {
    if (m < 1 || m > a.map_count()) throw std::invalid_argument("fixed_point_separation: map index out of range");
    if (!(h > 0.0 && h < a.diam)) throw std::invalid_argument("fixed_point_separation: need 0 < h < diam");
    const ConvexHull base = hull_approx(a, opts.hull_tol).hull;
    const Vec eta = a.map(m).fixed_point();
    const Partition part = partition_lh(a, h);
    double best = std::numeric_limits<double>::infinity();
    for (const VecIndex& idx : part.indices) {
        if (idx.front() == m) continue;
        best = std::min(best, base.transformed(compose(a, idx)).distance_to(eta));
    }
    return clamp_touching(best, opts.touch_tol, nullptr);
}

double hull_separation(const Attractor& a, double h, const SeparationOptions& opts) {
    if (!(h > 0.0 && h < a.diam)) throw std::invalid_argument("hull_separation: need 0 < h < diam");
    const ConvexHull base = hull_approx(a, opts.hull_tol).hull;
    const Partition part = partition_lh(a, h);
    if (part.size() > 20000)
        throw std::runtime_error("hull_separation: partition too large for pairwise hull distances");
    std::vector<ConvexHull> hulls;
    hulls.reserve(part.size());
    for (const VecIndex& idx : part.indices) hulls.push_back(base.transformed(compose(a, idx)));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hulls.size(); ++i)
        for (std::size_t j = i + 1; j < hulls.size(); ++j) {
            if (part.indices[i].front() == part.indices[j].front()) continue;
            best = std::min(best, hull_distance(hulls[i], hulls[j]));
            if (best == 0.0) return 0.0;
        }
    return clamp_touching(best, opts.touch_tol, nullptr);
}

double hull_separation_level1(const Attractor& a, const SeparationOptions& opts) {
    const ConvexHull base = hull_approx(a, opts.hull_tol).hull;
    const int M = a.map_count();
    std::vector<ConvexHull> level1;
    level1.reserve(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) level1.push_back(base.transformed(a.map(m)));
    double best = std::numeric_limits<double>::infinity();
    for (int m = 0; m < M; ++m)
        for (int m2 = m + 1; m2 < M; ++m2)
            best = std::min(best, hull_distance(level1[static_cast<std::size_t>(m)],
                                                level1[static_cast<std::size_t>(m2)]));
    return clamp_touching(best, opts.touch_tol, nullptr);
}

SeparationReport separation_params(const Attractor& a, double h, const SeparationOptions& opts) {
    if (!(h > 0.0 && h < a.diam)) throw std::invalid_argument("separation_params: need 0 < h < diam");
    SeparationReport rep;
    rep.h = h;

    const int M = a.map_count();
    rep.r_gamma_hull = hull_separation_level1(a, opts);
    rep.touching_r_gamma_hull = rep.r_gamma_hull == 0.0;

    // Set separation estimated from point clouds of iterated fixed points.
    {
        const int depth = opts.cloud_depth > 0 ? opts.cloud_depth : auto_cloud_depth(M, opts.cloud_budget);
        const std::vector<Vec> cloud = point_cloud(a, depth);
        std::vector<std::vector<Vec>> images(static_cast<std::size_t>(M));
        for (int m = 1; m <= M; ++m) {
            images[static_cast<std::size_t>(m - 1)].reserve(cloud.size());
            for (const Vec& p : cloud) images[static_cast<std::size_t>(m - 1)].push_back(a.map(m)(p));
        }
        double best = std::numeric_limits<double>::infinity();
        for (int m = 0; m < M; ++m)
            for (int m2 = m + 1; m2 < M; ++m2)
                best = std::min(best, min_cloud_distance(images[static_cast<std::size_t>(m)],
                                                         images[static_cast<std::size_t>(m2)]));
        double rho_max = 0.0;
        for (const Similarity& s : a.maps) rho_max = std::max(rho_max, s.ratio());
        rep.r_gamma = clamp_touching(best, opts.touch_tol, &rep.touching_r_gamma);
        rep.r_gamma_error = 2.0 * std::pow(rho_max, depth) * a.diam;
    }

    rep.r_gamma_hull_h = hull_separation(a, h, opts);
    rep.touching_r_gamma_hull_h = rep.r_gamma_hull_h == 0.0;
    rep.r_m_h.reserve(static_cast<std::size_t>(M));
    for (int m = 1; m <= M; ++m) rep.r_m_h.push_back(fixed_point_separation(a, m, h, opts));
    return rep;
}

}  // namespace ifsq
