#pragma once

#include <optional>
#include <vector>

#include "ifsquad/vec.hpp"

namespace ifsq {

inline constexpr double kOrthogonalityTol = 1e-12;
inline constexpr double kRatioTol = 1e-12;

/// One contracting similarity x -> ratio * rotation * x + translation.
/// The rotation must be orthogonal (reflections permitted) and the ratio must
/// lie in (0,1); the only exception is the identity map produced by
/// compose() on an empty index, which carries ratio 1 and is flagged.
class Similarity {
public:
    Similarity(double ratio, const Mat& rotation, const Vec& translation);

    static Similarity identity(int n);

    int dim() const { return translation_.dim(); }
    double ratio() const { return ratio_; }
    const Mat& rotation() const { return rotation_; }
    const Vec& translation() const { return translation_; }
    bool is_identity() const { return identity_; }

    Vec operator()(const Vec& x) const { return rotation_.apply(x) * ratio_ + translation_; }

    /// The unique point with s(eta) = eta, via a direct 1x1 or 2x2 solve.
    Vec fixed_point() const;

private:
    struct unchecked_t {};
    Similarity(unchecked_t, double ratio, const Mat& rotation, const Vec& translation, bool identity)
        : ratio_(ratio), rotation_(rotation), translation_(translation), identity_(identity) {}

    double ratio_;
    Mat rotation_;
    Vec translation_;
    bool identity_ = false;

    friend Similarity compose(const Similarity&, const Similarity&);
};

/// Convenience factories.
Similarity similarity1(double ratio, double shift, double sign = 1.0);
Similarity similarity2(double ratio, double angle, double dx, double dy, bool reflect = false);

/// outer o inner as a single similarity.
Similarity compose(const Similarity& outer, const Similarity& inner);

enum class DiamProvenance { exact_user_supplied, hull_approximated };

/// A validated IFS of contracting similarities together with the derived
/// attractor data: Hausdorff dimension, total measure and diameter.
struct Attractor {
    int ambient_dim = 1;
    std::vector<Similarity> maps;
    double dim = 0.0;
    double measure = 1.0;
    double diam = 1.0;
    DiamProvenance diam_provenance = DiamProvenance::hull_approximated;

    int map_count() const { return static_cast<int>(maps.size()); }
    const Similarity& map(int m) const { return maps[static_cast<std::size_t>(m - 1)]; }
};

/// Unique d with sum_m ratio_m^d = 1. Bisection on the monotone residual,
/// then one Newton polish; residual below 1e-14 on return.
double solve_dimension(const std::vector<double>& ratios);

/// Builds an attractor. The measure defaults to 1 (normalised convention)
/// and the diameter defaults to a converged hull approximation.
Attractor make_attractor(std::vector<Similarity> maps, int ambient_dim,
                         std::optional<double> measure_override = std::nullopt,
                         std::optional<double> diam_override = std::nullopt);

bool is_uniform(const Attractor& a, double tol = kRatioTol);

/// Address of a sub-component: entries in 1..M, empty denotes the whole set.
using VecIndex = std::vector<int>;

void validate_index(const Attractor& a, const VecIndex& index);

/// s_{m_1} o ... o s_{m_l}; the empty index gives the flagged identity.
Similarity compose(const Attractor& a, const VecIndex& index);

struct SubComponent {
    VecIndex index;
    Similarity map = Similarity::identity(1);
    double diam = 0.0;
    double measure = 0.0;
    const Attractor* parent = nullptr;
};

/// Addressed piece with diameter and measure from the scaling relations;
/// products are accumulated in log space so deep indices do not underflow.
SubComponent subcomponent(const Attractor& a, const VecIndex& index);

}  // namespace ifsq
