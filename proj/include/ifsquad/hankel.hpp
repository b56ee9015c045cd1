#pragma once

#include <complex>

namespace ifsq {

/// Hankel functions of the first kind, orders 0 and 1, for real positive
/// argument. Ascending series below the switch point, large-argument
/// asymptotic expansion above it; both accumulated in extended precision.
std::complex<double> hankel1_0(double z);
std::complex<double> hankel1_1(double z);

}  // namespace ifsq
