#pragma once

#include "ifsquad/geometry.hpp"
#include "ifsquad/quadrature.hpp"

namespace ifsq {

/// The model singular kernel: log|x-y| for t = 0 and |x-y|^{-t} for t > 0.
struct PhiTKernel {
    double t;
    explicit PhiTKernel(double t_) : t(t_) {
        if (!(t >= 0.0)) throw std::invalid_argument("PhiTKernel: exponent must be nonnegative");
    }
};

/// Second-derivative scale of the kernel: 2 for the log branch, t(t+2) else.
inline double phi_t_hessian_scale(double t) { return t == 0.0 ? 2.0 : t * (t + 2.0); }

double phi_t(double t, const Vec& x, const Vec& y);

struct SingularOptions {
    bool strict = false;         // turn precondition warnings into errors
    int check_depth = 5;         // refinement depth of the numeric precondition checks
    bool symmetry_halving = true;
};

/// Singular integral of phi_t(., eta_m) over the attractor, eta_m the fixed
/// point of map m, rewritten through self-similarity as a geometric prefactor
/// applied to regular composite-rule integrals over the other level-1
/// components. Requires 0 <= t < dim.
double integrate_phi_t_at_fixed_point(const Attractor& a, double t, int m, double h,
                                      const SingularOptions& opts = {});

/// Singular double integral of phi_t over the attractor squared, rewritten as
/// a prefactor applied to the off-diagonal level-1 block integrals.
double integrate_phi_t_double(const Attractor& a, double t, double h, const SingularOptions& opts = {});

/// Error bound for the fixed-point rule in terms of the separation between
/// the fixed point and the scale-h components of the other branches.
double bound_phi_t_single(const Attractor& a, double t, int m, double h);

/// Error bound for the double rule in terms of the scale-h hull separation.
double bound_phi_t_double(const Attractor& a, double t, double h);

namespace detail {

/// The double rule applied to the sub-component addressed by root (empty root
/// means the whole attractor); used directly by the singularity-subtraction
/// quadrature so diagonal blocks reuse the same machinery.
double phi_t_double_block(const Attractor& a, const VecIndex& root, double t, double h,
                          const SingularOptions& opts);

}  // namespace detail

}  // namespace ifsq
