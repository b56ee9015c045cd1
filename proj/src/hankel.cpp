#include "ifsquad/hankel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ifsq {

namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kPi = 3.141592653589793238462643383279502884L;

// Below the switch point the ascending series of J and Y carry at most ~1e5
// of cancellation, which extended precision absorbs; above it the divergent
// asymptotic expansion has already passed its minimal term at ~1e-14.
constexpr double kSwitch = 14.0;

struct SmallZ {
    long double j0, y0, j1, y1;
};

// Power series of J0, Y0, J1, Y1 around z = 0, with harmonic-number sums for
// the Y terms.
SmallZ ascending_series(double z) {
    const long double zl = z;
    const long double q = 0.25L * zl * zl;  // (z/2)^2
    const long double log_half_z = std::log(0.5L * zl);

    long double j0 = 1.0L, s0 = 0.0L;
    {
        long double term = 1.0L, harmonic = 0.0L;
        for (int k = 1; k < 400; ++k) {
            term *= -q / (static_cast<long double>(k) * k);
            harmonic += 1.0L / k;
            j0 += term;
            s0 -= harmonic * term;
            if (std::abs(term) < 1e-24L * (1.0L + std::abs(j0))) break;
        }
    }

    long double j1sum = 1.0L, s1 = 1.0L;  // k = 0 terms; H_0 + H_1 = 1
    {
        long double c = 1.0L, hk = 0.0L, hk1 = 1.0L;
        for (int k = 1; k < 400; ++k) {
            c *= -q / (static_cast<long double>(k) * (k + 1));
            hk += 1.0L / k;
            hk1 += 1.0L / (k + 1);
            j1sum += c;
            s1 += (hk + hk1) * c;
            if (std::abs(c) < 1e-24L * (1.0L + std::abs(j1sum))) break;
        }
    }

    SmallZ r;
    r.j0 = j0;
    r.j1 = 0.5L * zl * j1sum;
    const long double two_over_pi = 2.0L / kPi;
    r.y0 = two_over_pi * ((log_half_z + kEulerGamma) * r.j0 + s0);
    r.y1 = two_over_pi * ((log_half_z + kEulerGamma) * r.j1 - 1.0L / zl - 0.25L * zl * s1);
    return r;
}

// H_nu(z) ~ sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)} sum_k i^k a_k(nu) / z^k,
// truncated at the smallest term.
std::complex<double> asymptotic_hankel(double z, int nu) {
    const long double zl = z;
    const long double mu = 4.0L * nu * nu;
    std::complex<long double> sum(1.0L, 0.0L);
    std::complex<long double> term(1.0L, 0.0L);
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k < 80; ++k) {
        const long double f = (mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * zl);
        term *= std::complex<long double>(0.0L, f);
        const long double mag = std::abs(term);
        if (mag > prev) break;
        sum += term;
        prev = mag;
        if (mag < 1e-22L * std::abs(sum)) break;
    }
    const long double omega = zl - 0.5L * nu * kPi - 0.25L * kPi;
    const long double pref = std::sqrt(2.0L / (kPi * zl));
    const std::complex<long double> phase(std::cos(omega), std::sin(omega));
    const std::complex<long double> h = pref * phase * sum;
    return {static_cast<double>(h.real()), static_cast<double>(h.imag())};
}

}  // namespace

std::complex<double> hankel1_0(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("hankel1_0: argument must be positive");
    if (z <= kSwitch) {
        const SmallZ s = ascending_series(z);
        return {static_cast<double>(s.j0), static_cast<double>(s.y0)};
    }
    return asymptotic_hankel(z, 0);
}

std::complex<double> hankel1_1(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("hankel1_1: argument must be positive");
    if (z <= kSwitch) {
        const SmallZ s = ascending_series(z);
        return {static_cast<double>(s.j1), static_cast<double>(s.y1)};
    }
    return asymptotic_hankel(z, 1);
}

}  // namespace ifsq
