#pragma once

#include <vector>

#include "ifsquad/ifs.hpp"
#include "ifsquad/vec.hpp"

namespace ifsq {

/// Convex hull of a finite point set. For ambient dimension 1 this is an
/// interval; for dimension 2 a counterclockwise vertex list with no three
/// collinear vertices (degenerate point/segment hulls are permitted).
class ConvexHull {
public:
    static ConvexHull interval(double a, double b);
    static ConvexHull of_points(int dim, std::vector<Vec> points);

    int dim() const { return n_; }
    double lo() const { return verts_.front()[0]; }
    double hi() const { return verts_.back()[0]; }
    const std::vector<Vec>& vertices() const { return verts_; }

    double diameter() const;
    bool contains(const Vec& p, double tol = 0.0) const;
    double distance_to(const Vec& p) const;

    /// Affine image; vertex order is flipped after a reflection so the
    /// result stays counterclockwise.
    ConvexHull transformed(const Similarity& s) const;

private:
    ConvexHull(int n, std::vector<Vec> verts) : n_(n), verts_(std::move(verts)) {}

    int n_;
    std::vector<Vec> verts_;
};

/// Euclidean distance between two convex hulls; 0 iff they intersect.
double hull_distance(const ConvexHull& h1, const ConvexHull& h2);

struct ApproxHull {
    ConvexHull hull;
    int levels = 0;          // refinement depth of the generating point cloud
    double defect_bound = 0; // Hausdorff distance to the true hull is at most this
};

/// Inner approximation of the attractor's convex hull from iterated images
/// of the fixed points, refined until successive hulls differ by less than
/// tol in Hausdorff distance.
ApproxHull hull_approx(const Attractor& a, double tol, int max_level = 24);

/// Same construction before an Attractor exists.
ApproxHull hull_of_maps(const std::vector<Similarity>& maps, int ambient_dim, double tol,
                        int max_level = 24);

struct SeparationOptions {
    int cloud_depth = 0;       // 0 = choose automatically from a point budget
    std::size_t cloud_budget = 4096;
    double touch_tol = 1e-12;  // distances below this are clamped to 0
    double hull_tol = 1e-10;
};

/// The four separation parameters at partition parameter h.
struct SeparationReport {
    double h = 0.0;
    double r_gamma = 0.0;         // min distance between level-1 components (cloud estimate)
    double r_gamma_error = 0.0;   // two-sided error band of the r_gamma estimate
    double r_gamma_hull = 0.0;    // min distance between level-1 hulls
    double r_gamma_hull_h = 0.0;  // min hull distance across distinct level-1 branches at scale h
    std::vector<double> r_m_h;    // per-map fixed-point-to-hull distances at scale h
    bool touching_r_gamma = false;
    bool touching_r_gamma_hull = false;
    bool touching_r_gamma_hull_h = false;

    double min_r_m_h() const;
};

SeparationReport separation_params(const Attractor& a, double h, const SeparationOptions& opts = {});

/// R_{m,h}: distance from the fixed point of map m to the nearest hull of a
/// scale-h component in a different level-1 branch.
double fixed_point_separation(const Attractor& a, int m, double h, const SeparationOptions& opts = {});

/// R_{Gamma,Hull,h}: min hull distance over scale-h component pairs whose
/// first index entries differ.
double hull_separation(const Attractor& a, double h, const SeparationOptions& opts = {});

/// R_{Gamma,Hull}: min distance between level-1 component hulls.
double hull_separation_level1(const Attractor& a, const SeparationOptions& opts = {});

}  // namespace ifsq
