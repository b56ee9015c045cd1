// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.
//
// The default levels keep the total runtime suitable for CI; --paper-scale
// switches the two convergence studies to the full-resolution references
// (slow: the reference double sums are O(N^2) with N up to 16384).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ifsquad/convergence.hpp"
#include "ifsquad/geometry.hpp"
#include "ifsquad/hankel.hpp"
#include "ifsquad/kernel_helmholtz.hpp"
#include "ifsquad/kernel_phi_t.hpp"
#include "ifsquad/partition.hpp"
#include "ifsquad/presets.hpp"
#include "ifsquad/quadrature.hpp"
#include "oracle_bessel.hpp"
#include "oracle_naive.hpp"

using namespace ifsq;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s  criterion %2d: %s  [%s]\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* spec, ...) {
    char buf[512];
    va_list args;
    va_start(args, spec);
    std::vsnprintf(buf, sizeof(buf), spec, args);
    va_end(args);
    return buf;
}

double slope_fit(const std::vector<double>& logx, const std::vector<double>& logy) {
    const double n = static_cast<double>(logx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < logx.size(); ++i) {
        sx += logx[i];
        sy += logy[i];
        sxx += logx[i] * logx[i];
        sxy += logx[i] * logy[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1. Exact log-kernel value on the interval.
void criterion_exact_log_double() {
    Timer timer;
    const Attractor a = preset("interval").attractor;
    std::vector<double> errs;
    for (int ell : {7, 8, 9, 10})
        errs.push_back(std::abs(integrate_phi_t_double(a, 0.0, level_parameter(a, ell)) + 1.5));
    bool ok = errs.back() < 1e-4;
    std::string eocs;
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double eoc = std::log2(errs[i - 1] / errs[i]);
        eocs += fmt("%s%.3f", i > 1 ? "," : "", eoc);
        ok = ok && eoc >= 1.9;
    }
    const double secs = timer.seconds();
    ok = ok && secs < 10.0;
    report(1, ok, "interval log-kernel double integral reproduces -3/2",
           fmt("err(l=10)=%.3e, eoc={%s}, %.1fs", errs.back(), eocs.c_str(), secs));
}

// 2. Fixed-point singular integral on the interval.
void criterion_exact_log_single() {
    Timer timer;
    const Attractor a = preset("interval").attractor;
    std::vector<double> errs;
    for (int ell : {7, 8, 9, 10})
        errs.push_back(
            std::abs(integrate_phi_t_at_fixed_point(a, 0.0, 1, level_parameter(a, ell)) + 1.0));
    bool ok = errs.back() < 1e-4;
    std::string eocs;
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double eoc = std::log2(errs[i - 1] / errs[i]);
        eocs += fmt("%s%.3f", i > 1 ? "," : "", eoc);
        ok = ok && eoc >= 1.9;
    }
    const double secs = timer.seconds();
    ok = ok && secs < 5.0;
    report(2, ok, "interval fixed-point log integral reproduces -1",
           fmt("err(l=10)=%.3e, eoc={%s}, %.1fs", errs.back(), eocs.c_str(), secs));
}

// 3. Helmholtz convergence-rate reproduction on the Cantor set.
void criterion_helmholtz_cantor_slope(bool paper_scale) {
    Timer timer;
    const Attractor a = preset("cantor(1/3)").attractor;
    const HelmholtzKernel ker(5.0, 1);
    const int ref_level = paper_scale ? 13 : 11;
    const Complex ref = integrate_helmholtz_singular(a, ker, level_parameter(a, ref_level));
    std::vector<double> logN, logE;
    for (int ell = 2; ell <= 8; ++ell) {
        const Complex v = integrate_helmholtz_singular(a, ker, level_parameter(a, ell));
        logN.push_back(ell * std::log(2.0));
        logE.push_back(std::log(std::abs(v - ref)));
    }
    const double slope = slope_fit(logN, logE);
    const double target = -2.0 / a.dim;
    const double secs = timer.seconds();
    const bool ok = std::abs(slope - target) <= 0.15 * std::abs(target) && secs < 60.0;
    report(3, ok, "cantor k=5 error slope matches -2/d",
           fmt("slope=%.3f, target=%.3f +-15%%, ref l=%d, %.1fs", slope, target, ref_level, secs));
}

// 4. Bounded relative error for dusts approaching dimension 1.
void criterion_dust_relative_errors(bool paper_scale) {
    Timer timer;
    const HelmholtzKernel ker(5.0, 2);
    const int ref_level = paper_scale ? 7 : 5;
    double rel[2][2], abs_scaled[2][2];
    int family = 0;
    for (const char* name : {"cantor-dust(1/3)", "cantor-dust(0.2501)"}) {
        const Attractor dust = preset(name).attractor;
        const Complex ref = integrate_helmholtz_singular(dust, ker, level_parameter(dust, ref_level));
        int idx = 0;
        for (int ell : {3, 4}) {
            const Complex v = integrate_helmholtz_singular(dust, ker, level_parameter(dust, ell));
            // normalised measure: the plain absolute error is the
            // measure^2-scaled one
            abs_scaled[family][idx] = std::abs(v - ref);
            rel[family][idx] = std::abs(v - ref) / std::abs(ref);
            ++idx;
        }
        ++family;
    }
    bool ok = true;
    for (int idx = 0; idx < 2; ++idx) {
        const double ratio = std::max(rel[0][idx] / rel[1][idx], rel[1][idx] / rel[0][idx]);
        ok = ok && ratio < 10.0;
        ok = ok && abs_scaled[1][idx] > abs_scaled[0][idx];
    }
    const double secs = timer.seconds();
    ok = ok && secs < 900.0;
    report(4, ok, "dust relative errors stay comparable while scaled absolute errors grow",
           fmt("rel(1/3)={%.2e,%.2e}, rel(0.2501)={%.2e,%.2e}, ref l=%d, %.1fs", rel[0][0], rel[0][1],
               rel[1][0], rel[1][1], ref_level, secs));
}

// 5. Regular-rule order and bound domination for smooth integrands.
void criterion_regular_rule_order() {
    Timer timer;
    const Attractor a = preset("cantor(1/3)").attractor;
    bool ok = true;
    std::string detail;

    {  // single integral of cos(3x)
        const double c = 3.0;
        auto f = [c](const Vec& x) { return Complex(std::cos(c * x[0]), 0.0); };
        const Complex ref = integrate_single(a, f, level_parameter(a, 14));
        RegularityData reg;
        reg.lip0 = c;
        reg.sup_grad = c;
        reg.sup_hess = c * c;
        std::vector<double> errs;
        for (int ell = 2; ell <= 9; ++ell) {
            const double h = level_parameter(a, ell);
            const double err = std::abs(integrate_single(a, f, h) - ref);
            ok = ok && err <= bound_single(a, h, reg);
            errs.push_back(err);
        }
        double min_eoc = 1e9;  // the two rates among the three finest levels
        for (std::size_t i = errs.size() - 3; i + 1 < errs.size(); ++i)
            min_eoc = std::min(min_eoc, std::log(errs[i] / errs[i + 1]) / std::log(3.0));
        ok = ok && min_eoc >= 1.9;
        detail += fmt("single eoc>=%.3f", min_eoc);
    }
    {  // double integral of cos(x-y)
        auto f = [](const Vec& x, const Vec& y) { return Complex(std::cos(x[0] - y[0]), 0.0); };
        DoubleOptions sym;
        sym.symmetric = true;
        const Complex ref = integrate_double(a, a, f, level_parameter(a, 11), sym);
        RegularityData reg;
        reg.lip0 = std::sqrt(2.0);
        reg.sup_grad = std::sqrt(2.0);
        reg.sup_hess = 2.0;
        std::vector<double> errs;
        for (int ell = 2; ell <= 9; ++ell) {
            const double h = level_parameter(a, ell);
            const double err = std::abs(integrate_double(a, a, f, h, sym) - ref);
            ok = ok && err <= bound_double(a, a, h, reg);
            errs.push_back(err);
        }
        double min_eoc = 1e9;
        for (std::size_t i = errs.size() - 3; i + 1 < errs.size(); ++i)
            min_eoc = std::min(min_eoc, std::log(errs[i] / errs[i + 1]) / std::log(3.0));
        ok = ok && min_eoc >= 1.9;
        detail += fmt(", double eoc>=%.3f", min_eoc);
    }
    report(5, ok, "smooth integrands converge at second order below the bounds",
           detail + fmt(", %.1fs", timer.seconds()));
}

// 6. Exactness of constants and affine integrands on every preset.
void criterion_exactness() {
    Timer timer;
    bool ok = true;
    std::string worst_name = "-";
    double worst = 0.0;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (const char* name : {"interval", "cantor(1/3)", "cantor-dust(1/3)", "table1-II", "table1-III",
                             "vicsek", "koch-snowflake", "fig3-cantor", "eq62-nonuniform"}) {
        const Attractor a = preset(name).attractor;
        const Vec bc = barycentre(a);
        for (double frac : {0.75, 0.31, 0.12}) {
            const double h = frac * a.diam;
            const QuadratureRule rule = rule_from_partition(partition_lh(a, h));
            const double wsum_dev = std::abs(rule.weight_sum() - a.measure) / a.measure;
            const Complex one = integrate_single(a, [](const Vec&) { return Complex(1.0, 0.0); }, h);
            const double one_dev = std::abs(one.real() - a.measure) / a.measure;
            const Vec grad = a.ambient_dim == 1 ? Vec(coef(rng)) : Vec(coef(rng), coef(rng));
            const double b0 = coef(rng);
            const Complex affine =
                integrate_single(a, [&](const Vec& x) { return Complex(grad.dot(x) + b0, 0.0); }, h);
            const double expected = a.measure * (grad.dot(bc) + b0);
            const double affine_dev = std::abs(affine.real() - expected) / (1.0 + std::abs(expected));
            const double dev = std::max({wsum_dev, one_dev, affine_dev});
            if (dev > worst) {
                worst = dev;
                worst_name = name;
            }
            ok = ok && dev <= 1e-12;
        }
    }
    report(6, ok, "constants and affine integrands are exact on every preset",
           fmt("worst deviation %.2e (%s), %.1fs", worst, worst_name.c_str(), timer.seconds()));
}

// 7. Dimension and separation metadata.
void criterion_metadata_table() {
    Timer timer;
    bool ok = true;
    std::string detail;

    const double d1 = solve_dimension({1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3});
    const double d2 = solve_dimension({0.41, 0.41, 0.41, 0.41});
    const double d3 = solve_dimension({1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 27});
    const double d4 = solve_dimension({1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3, 1.0 / 3});
    const double d62 = preset("eq62-nonuniform").attractor.dim;
    ok = ok && std::abs(d1 - 1.26) < 0.005 && std::abs(d2 - 1.55) < 0.005 &&
         std::abs(d3 - 1.28) < 0.005 && std::abs(d4 - 1.46) < 0.005 && std::abs(d62 - 1.20) < 0.005;
    ok = ok && std::abs(d1 - std::log(4.0) / std::log(3.0)) < 1e-12;
    ok = ok && std::abs(d2 - std::log(4.0) / std::log(1.0 / 0.41)) < 1e-12;
    ok = ok && std::abs(d4 - std::log(5.0) / std::log(3.0)) < 1e-12;
    ok = ok && std::abs(d62 - std::log(0.5 * (1.0 + std::sqrt(13.0))) / std::log(2.0)) < 1e-12;
    double z = 4.1;
    for (int i = 0; i < 60; ++i) z -= (z * z * z - 4 * z * z - 1) / (3 * z * z - 8 * z);
    ok = ok && std::abs(d3 - std::log(z) / std::log(3.0)) < 1e-12;
    detail += fmt("d={%.2f,%.2f,%.2f,%.2f}, d62=%.2f", d1, d2, d3, d4, d62);

    auto near = [&](double got, double expect) { return std::abs(got - expect) <= 1e-10; };
    {
        const SeparationReport r = separation_params(preset("cantor-dust(1/3)").attractor, 0.2);
        ok = ok && near(r.r_gamma, 1.0 / 3) && near(r.r_gamma_hull, 1.0 / 3) &&
             near(r.r_gamma_hull_h, 1.0 / 3) && near(r.min_r_m_h(), 2.0 / 3);
    }
    {
        const double rho = 0.41;
        const SeparationReport r = separation_params(preset("table1-II").attractor, 0.1);
        const double rmh = std::sqrt(1.0 / 3 - rho + rho * rho - rho * rho * rho +
                                     rho * rho * rho * rho);
        ok = ok && near(r.r_gamma_hull, 0.0) && near(r.min_r_m_h(), rmh) && near(r.r_m_h[3], rmh);
        ok = ok && r.r_gamma >= (1.0 - rho - 3 * rho * rho) / (2 * std::sqrt(3.0)) - 1e-10;
    }
    {
        const SeparationReport r = separation_params(preset("table1-III").attractor, 0.2);
        ok = ok && near(r.r_gamma, std::sqrt(2.0) / 27) && near(r.r_gamma_hull, 0.0) &&
             near(r.r_gamma_hull_h, std::sqrt(2.0) / 27) &&
             near(r.min_r_m_h(), 5.0 * std::sqrt(2.0) / 117) &&
             near(r.r_m_h[4], 5.0 * std::sqrt(2.0) / 117);
    }
    {
        const SeparationReport r = separation_params(preset("vicsek").attractor, 0.2);
        ok = ok && near(r.r_gamma, 0.0) && near(r.r_gamma_hull, 0.0) && near(r.r_gamma_hull_h, 0.0) &&
             near(r.min_r_m_h(), 1.0 / (3 * std::sqrt(2.0)));
    }
    report(7, ok, "dimension values and separation parameters match the closed forms",
           detail + fmt(", %.1fs", timer.seconds()));
}

// 8. Hankel evaluations against the independent oracle.
void criterion_hankel_oracle() {
    Timer timer;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double zv = 1e-2 * std::pow(1e4, i / 199.0);
        worst = std::max(worst, std::abs(hankel1_0(zv) - oracle::hankel1_0(zv)) /
                                    std::abs(oracle::hankel1_0(zv)));
        worst = std::max(worst, std::abs(hankel1_1(zv) - oracle::hankel1_1(zv)) /
                                    std::abs(oracle::hankel1_1(zv)));
    }
    bool ok = worst <= 1e-8;
    double worst_diff = 0.0;
    for (const double zv : {0.5, 2.0, 10.0}) {
        const double step = 1e-5;
        const Complex der = (hankel1_0(zv + step) - hankel1_0(zv - step)) / (2.0 * step);
        worst_diff = std::max(worst_diff, std::abs(der + hankel1_1(zv)));
    }
    ok = ok && worst_diff <= 1e-6;
    report(8, ok, "hankel functions match the integral-representation oracle",
           fmt("max rel dev %.2e, derivative identity dev %.2e, %.1fs", worst, worst_diff,
               timer.seconds()));
}

// 9. Splitting identity and the diagonal limits of the smooth remainder.
void criterion_splitting_identity() {
    Timer timer;
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> wavenumber(0.5, 20.0);
    double worst = 0.0;
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const HelmholtzKernel ker(wavenumber(rng), n);
            const Vec x = n == 1 ? Vec(coord(rng)) : Vec(coord(rng), coord(rng));
            Vec y = n == 1 ? Vec(coord(rng)) : Vec(coord(rng), coord(rng));
            if (dist(x, y) < 1e-9) y = y + (n == 1 ? Vec(0.5) : Vec(0.5, 0.0));
            const Complex lhs = phi(ker, x, y);
            const Complex rhs = splitting_constant(n) * phi_t(static_cast<double>(n - 1), x, y) +
                                phi_star(ker, x, y);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
    }
    bool ok = worst <= 1e-12;
    const double k = 7.0;
    constexpr double pi = std::numbers::pi;
    constexpr double euler_gamma = 0.5772156649015328606065121;
    const Complex diag1 = phi_star(HelmholtzKernel(k, 1), Vec(0.4), Vec(0.4));
    ok = ok && diag1 == Complex((-std::log(0.5 * k) - euler_gamma) / (2.0 * pi), 0.25);
    const Complex diag2 = phi_star(HelmholtzKernel(k, 2), Vec(0.4, 0.1), Vec(0.4, 0.1));
    ok = ok && diag2 == Complex(0.0, k / (4.0 * pi));
    report(9, ok, "splitting identity holds and diagonal limits are exact",
           fmt("max rel dev %.2e, %.1fs", worst, timer.seconds()));
}

// 10. Singular rules against the naive deep-level oracle.
void criterion_naive_oracle_equivalence() {
    Timer timer;
    const Attractor a = preset("cantor(1/3)").attractor;
    bool ok = true;
    std::string detail;
    for (double t : {0.0, 0.3}) {
        const Vec eta2 = a.map(2).fixed_point();
        const double impl_s = integrate_phi_t_at_fixed_point(a, t, 2, level_parameter(a, 9));
        const double naive_s = oracle::phi_t_single_naive(a, t, eta2, level_parameter(a, 16));
        const double dev_s = std::abs(impl_s - naive_s) / std::abs(naive_s);
        const double impl_d = integrate_phi_t_double(a, t, level_parameter(a, 6));
        const double naive_d = oracle::phi_t_double_naive(a, t, level_parameter(a, 13));
        const double dev_d = std::abs(impl_d - naive_d) / std::abs(naive_d);
        ok = ok && dev_s <= 1e-3 && dev_d <= 1e-3;
        detail += fmt("%st=%.1f: single %.1e, double %.1e", detail.empty() ? "" : "; ", t, dev_s, dev_d);
    }
    report(10, ok, "singular rules agree with the naive deep-level oracle",
           detail + fmt(", %.1fs", timer.seconds()));
}

}  // namespace

int main(int argc, char** argv) {
    bool paper_scale = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--paper-scale") == 0) paper_scale = true;

    criterion_exact_log_double();
    criterion_exact_log_single();
    criterion_helmholtz_cantor_slope(paper_scale);
    criterion_dust_relative_errors(paper_scale);
    criterion_regular_rule_order();
    criterion_exactness();
    criterion_metadata_table();
    criterion_hankel_oracle();
    criterion_splitting_identity();
    criterion_naive_oracle_equivalence();

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
