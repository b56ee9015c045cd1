#pragma once

#include <numbers>

#include "ifsquad/hankel.hpp"
#include "ifsquad/kernel_phi_t.hpp"
#include "ifsquad/quadrature.hpp"

namespace ifsq {

/// Fundamental solution of the Helmholtz equation in R^{n+1} restricted to an
/// n-dimensional screen, n in {1,2}. c_osc is the threshold on
/// wavenumber * diameter separating the non-oscillatory and oscillatory
/// treatments of the singular double integral.
struct HelmholtzKernel {
    double wavenumber;
    int screen_dim;
    double c_osc;

    explicit HelmholtzKernel(double k, int n, double c_osc_ = 2.0 * std::numbers::pi)
        : wavenumber(k), screen_dim(n), c_osc(c_osc_) {
        if (!(k > 0.0))
            throw std::invalid_argument("HelmholtzKernel: wavenumber must be positive (use the phi_t "
                                        "kernel for Laplace-type problems)");
        if (n != 1 && n != 2) throw std::invalid_argument("HelmholtzKernel: screen dimension must be 1 or 2");
        if (!(c_osc > 0.0)) throw std::invalid_argument("HelmholtzKernel: c_osc must be positive");
    }

    /// h* = c_osc / k, the block size of the oscillatory treatment.
    double oscillation_cutoff() const { return c_osc / wavenumber; }
};

/// Coefficient of the matching singular kernel in the splitting
/// phi = C_n phi_{n-1} + phi_star.
inline double splitting_constant(int n) {
    return n == 1 ? -1.0 / (2.0 * std::numbers::pi) : 1.0 / (4.0 * std::numbers::pi);
}

Complex phi(const HelmholtzKernel& ker, const Vec& x, const Vec& y);

/// Smooth remainder phi - C_n phi_{n-1}; continuous across x = y, evaluated
/// through a cancellation-free series near the diagonal.
Complex phi_star(const HelmholtzKernel& ker, const Vec& x, const Vec& y);

/// Plain iterated rule for the kernel between two (expectedly disjoint)
/// attractors.
Complex integrate_helmholtz_double(const Attractor& a1, const Attractor& a2, const HelmholtzKernel& ker,
                                   double h, const SingularOptions& opts = {});

/// Singularity-subtraction rule for the singular double integral over the
/// attractor squared: the matching phi_{n-1} part is integrated through the
/// self-similarity reformulation and the smooth remainder by the composite
/// rule; above the oscillation threshold this is applied blockwise on a
/// partition at h* = c_osc / k.
Complex integrate_helmholtz_singular(const Attractor& a, const HelmholtzKernel& ker, double h,
                                     const SingularOptions& opts = {});

/// Convergence-rate predictor, proportional to the true error bound with an
/// absolute constant depending only on c_osc: h^2 mu^2 scaling for uniform
/// attractors, h mu^2 for non-uniform ones.
double bound_helmholtz_singular(const Attractor& a, const HelmholtzKernel& ker, double h);

}  // namespace ifsq
