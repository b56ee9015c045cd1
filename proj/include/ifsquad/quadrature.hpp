#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>

#include "ifsquad/partition.hpp"
#include "ifsquad/summation.hpp"

namespace ifsq {

using Complex = std::complex<double>;
using Integrand1 = std::function<Complex(const Vec&)>;
using Integrand2 = std::function<Complex(const Vec&, const Vec&)>;

namespace detail {

inline constexpr std::size_t kRowsPerBlock = 16;

template <class T, class F>
T single_rule_sum(const QuadratureRule& rule, F&& f) {
    AccumulatorFor<T> acc;
    for (std::size_t i = 0; i < rule.size(); ++i) acc.add(rule.weights[i] * f(rule.nodes[i]));
    return acc.value();
}

template <class T, class F>
T pair_rule_sum(const QuadratureRule& r1, const QuadratureRule& r2, F&& f) {
    return block_reduce<T>(r1.size(), kRowsPerBlock, [&](std::size_t begin, std::size_t end, auto& acc) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vec& x = r1.nodes[i];
            const double wi = r1.weights[i];
            for (std::size_t j = 0; j < r2.size(); ++j) acc.add(wi * r2.weights[j] * f(x, r2.nodes[j]));
        }
    });
}

/// Upper triangle mirrored onto the lower one; for symmetric integrands on a
/// single rule this halves the number of evaluations.
template <class T, class F>
T symmetric_rule_sum(const QuadratureRule& r, F&& f) {
    return block_reduce<T>(r.size(), kRowsPerBlock, [&](std::size_t begin, std::size_t end, auto& acc) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vec& x = r.nodes[i];
            const double wi = r.weights[i];
            acc.add(wi * wi * f(x, x));
            for (std::size_t j = i + 1; j < r.size(); ++j)
                acc.add(2.0 * wi * r.weights[j] * f(x, r.nodes[j]));
        }
    });
}

}  // namespace detail

/// Composite one-point rule over the scale-h partition, summed with
/// compensated accumulation in lexicographic index order.
Complex integrate_single(const Attractor& a, const Integrand1& f, double h);

struct DoubleOptions {
    bool symmetric = false;  // integrand satisfies f(x,y) = f(y,x)
};

/// Iterated rule over both partitions. With the symmetric flag set and both
/// arguments being the same attractor, only the upper triangle plus diagonal
/// is evaluated and mirrored.
Complex integrate_double(const Attractor& a1, const Attractor& a2, const Integrand2& f, double h,
                         const DoubleOptions& opts = {});

/// User-supplied regularity data for the error bounds: a Lipschitz constant
/// of f, a sup norm of the gradient, and a sup norm of the Hessian (spectral
/// norm), all over the hulls of the partition components.
struct RegularityData {
    std::optional<double> lip0;
    std::optional<double> sup_grad;
    std::optional<double> sup_hess;
};

/// Tightest available rigorous error bound for the single-integral rule.
double bound_single(const Attractor& a, double h, const RegularityData& reg);

/// Same for the iterated rule; the product-domain diameter contributes the
/// sqrt(2) and doubled-h^2 factors.
double bound_double(const Attractor& a1, const Attractor& a2, double h, const RegularityData& reg);

}  // namespace ifsq
