#include "ifsquad/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ifsq {

namespace {

std::string describe_node(const Vec& x) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << x[0];
    if (x.dim() == 2) os << ", " << x[1];
    os << ")";
    return os.str();
}

}  // namespace

Complex integrate_single(const Attractor& a, const Integrand1& f, double h) {
    const QuadratureRule rule = rule_from_partition(partition_lh(a, h));
    KahanSumComplex acc;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        try {
            acc.add(rule.weights[i] * f(rule.nodes[i]));
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("integrate_single: integrand failed at node ") +
                                     describe_node(rule.nodes[i]) + ": " + e.what());
        }
    }
    return acc.value();
}

Complex integrate_double(const Attractor& a1, const Attractor& a2, const Integrand2& f, double h,
                         const DoubleOptions& opts) {
    const QuadratureRule r1 = rule_from_partition(partition_lh(a1, h));
    auto guarded = [&](const Vec& x, const Vec& y) {
        try {
            return f(x, y);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("integrate_double: integrand failed at nodes ") +
                                     describe_node(x) + ", " + describe_node(y) + ": " + e.what());
        }
    };
    if (opts.symmetric && &a1 == &a2) return detail::symmetric_rule_sum<Complex>(r1, guarded);
    const QuadratureRule r2 = (&a1 == &a2) ? r1 : rule_from_partition(partition_lh(a2, h));
    return detail::pair_rule_sum<Complex>(r1, r2, guarded);
}

double bound_single(const Attractor& a, double h, const RegularityData& reg) {
    if (!reg.lip0 && !reg.sup_grad && !reg.sup_hess)
        throw std::invalid_argument("bound_single: no regularity datum supplied");
    double best = std::numeric_limits<double>::infinity();
    if (reg.lip0) best = std::min(best, h * a.measure * *reg.lip0);
    if (reg.sup_grad) best = std::min(best, h * a.measure * *reg.sup_grad);
    if (reg.sup_hess) best = std::min(best, 0.5 * h * h * a.measure * *reg.sup_hess);
    return best;
}

double bound_double(const Attractor& a1, const Attractor& a2, double h, const RegularityData& reg) {
    if (!reg.lip0 && !reg.sup_grad && !reg.sup_hess)
        throw std::invalid_argument("bound_double: no regularity datum supplied");
    const double mu2 = a1.measure * a2.measure;
    const double sqrt2 = std::sqrt(2.0);
    double best = std::numeric_limits<double>::infinity();
    if (reg.lip0) best = std::min(best, sqrt2 * h * mu2 * *reg.lip0);
    if (reg.sup_grad) best = std::min(best, sqrt2 * h * mu2 * *reg.sup_grad);
    if (reg.sup_hess) best = std::min(best, h * h * mu2 * *reg.sup_hess);
    return best;
}

}  // namespace ifsq
