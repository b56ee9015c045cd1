#include "ifsquad/convergence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ifsquad/quadrature.hpp"

namespace ifsq {

namespace {

double component_sum(const Vec& v) { return v.dim() == 1 ? v[0] : v[0] + v[1]; }

struct Evaluator {
    std::string kernel_desc;
    std::function<Complex(double)> at;  // value at partition parameter h
};

// The returned closures reference the attractor, which outlives them in
// run_convergence.
Evaluator build_evaluator(const Attractor& a, const ExperimentConfig& cfg) {
    SingularOptions sopts;
    sopts.strict = cfg.strict;
    sopts.symmetry_halving = cfg.symmetry_halving;

    Evaluator ev;
    if (cfg.kernel == "phi_t") {
        if (cfg.mode == "double") {
            ev.kernel_desc = "phi_t(t=" + std::to_string(cfg.t) + ") double";
            ev.at = [&a, t = cfg.t, sopts](double h) {
                return Complex(integrate_phi_t_double(a, t, h, sopts), 0.0);
            };
        } else if (cfg.mode == "fixed-point") {
            ev.kernel_desc = "phi_t(t=" + std::to_string(cfg.t) + ") fixed-point m=" +
                             std::to_string(cfg.fixed_point_map);
            ev.at = [&a, t = cfg.t, m = cfg.fixed_point_map, sopts](double h) {
                return Complex(integrate_phi_t_at_fixed_point(a, t, m, h, sopts), 0.0);
            };
        } else {
            throw std::out_of_range("run_convergence: phi_t supports modes double and fixed-point");
        }
    } else if (cfg.kernel == "helmholtz") {
        if (cfg.mode != "double")
            throw std::out_of_range("run_convergence: helmholtz supports mode double only");
        const HelmholtzKernel ker(cfg.wavenumber, a.ambient_dim, cfg.c_osc);
        ev.kernel_desc = "helmholtz(k=" + std::to_string(cfg.wavenumber) + ") singular double";
        ev.at = [&a, ker, sopts](double h) { return integrate_helmholtz_singular(a, ker, h, sopts); };
    } else if (cfg.kernel == "cos") {
        if (cfg.mode == "single") {
            ev.kernel_desc = "cos(c=" + std::to_string(cfg.cos_freq) + ") single";
            ev.at = [&a, c = cfg.cos_freq](double h) {
                return integrate_single(
                    a, [c](const Vec& x) { return Complex(std::cos(c * component_sum(x)), 0.0); }, h);
            };
        } else if (cfg.mode == "double") {
            ev.kernel_desc = "cos(c=" + std::to_string(cfg.cos_freq) + ") double";
            ev.at = [&a, c = cfg.cos_freq](double h) {
                DoubleOptions dopts;
                dopts.symmetric = true;
                return integrate_double(
                    a, a,
                    [c](const Vec& x, const Vec& y) {
                        return Complex(std::cos(c * (component_sum(x) - component_sum(y))), 0.0);
                    },
                    h, dopts);
            };
        } else {
            throw std::out_of_range("run_convergence: cos supports modes single and double");
        }
    } else {
        throw std::out_of_range("run_convergence: unknown kernel '" + cfg.kernel + "'");
    }
    return ev;
}

}  // namespace

ConvergenceReport run_convergence(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();

    Attractor attractor;
    if (cfg.attractor) {
        attractor = *cfg.attractor;
    } else if (!cfg.preset_spec.empty()) {
        attractor = preset(cfg.preset_spec).attractor;
    } else {
        throw std::out_of_range("run_convergence: no attractor given (preset or inline)");
    }
    const Evaluator ev = build_evaluator(attractor, cfg);

    struct LevelSpec {
        int ell;
        double h;
    };
    std::vector<LevelSpec> ladder;
    if (!cfg.h_values.empty()) {
        for (double h : cfg.h_values) ladder.push_back({-1, h});
        std::sort(ladder.begin(), ladder.end(), [](auto& x, auto& y) { return x.h > y.h; });
    } else {
        if (cfg.levels.empty()) throw std::out_of_range("run_convergence: empty level list");
        std::vector<int> levels = cfg.levels;
        std::sort(levels.begin(), levels.end());
        for (int ell : levels) ladder.push_back({ell, level_parameter(attractor, ell)});
    }

    Complex reference;
    if (cfg.exact) {
        reference = *cfg.exact;
    } else {
        double ref_h;
        if (cfg.reference_h) {
            ref_h = *cfg.reference_h;
        } else if (cfg.reference_level >= 0) {
            ref_h = level_parameter(attractor, cfg.reference_level);
        } else {
            // default reference resolutions: level 13 on the line, 7 in the plane
            ref_h = level_parameter(attractor, attractor.ambient_dim == 1 ? 13 : 7);
        }
        for (const LevelSpec& ls : ladder)
            if (!(ref_h < ls.h))
                throw std::out_of_range("run_convergence: reference must be strictly finer than every "
                                        "study level");
        reference = ev.at(ref_h);
    }

    ConvergenceReport rep;
    rep.preset = cfg.attractor ? std::string("(inline)") : cfg.preset_spec;
    rep.kernel_desc = ev.kernel_desc;
    rep.reference = reference;

    const double ref_mag = std::abs(reference);
    for (const LevelSpec& ls : ladder) {
        ConvergenceRow row;
        row.h = ls.h;
        const Partition part = partition_lh(attractor, ls.h);
        row.nodes = part.size();
        std::size_t max_len = 0;
        for (const VecIndex& idx : part.indices) max_len = std::max(max_len, idx.size());
        row.ell = ls.ell >= 0 ? ls.ell : static_cast<int>(max_len);
        row.value = ev.at(ls.h);
        row.abs_err = std::abs(row.value - reference);
        row.rel_err = ref_mag > 0.0 ? row.abs_err / ref_mag : std::numeric_limits<double>::quiet_NaN();
        if (rep.rows.empty()) {
            row.eoc = std::numeric_limits<double>::quiet_NaN();
        } else {
            const ConvergenceRow& prev = rep.rows.back();
            row.eoc = std::log(prev.abs_err / row.abs_err) / std::log(prev.h / row.h);
        }
        rep.rows.push_back(row);
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

}  // namespace

void emit_csv(const ConvergenceReport& report, std::ostream& out) {
    out << "ell,N,h,value_re,value_im,abs_err,rel_err,eoc\n";
    for (const ConvergenceRow& r : report.rows) {
        out << r.ell << ',' << r.nodes << ',' << fmt(r.h) << ',' << fmt(r.value.real()) << ','
            << fmt(r.value.imag()) << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err) << ',';
        if (!std::isnan(r.eoc)) out << fmt(r.eoc);
        out << '\n';
    }
}

void emit_plot_data(const ConvergenceReport& report, std::ostream& out) {
    for (const ConvergenceRow& r : report.rows) out << r.nodes << ' ' << fmt(r.abs_err) << '\n';
}

std::vector<ConvergenceRow> read_csv(std::istream& in) {
    std::vector<ConvergenceRow> rows;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
    if (line != "ell,N,h,value_re,value_im,abs_err,rel_err,eoc")
        throw std::runtime_error("read_csv: unexpected header '" + line + "'");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        ConvergenceRow r;
        auto next = [&]() {
            if (!std::getline(ls, field, ',')) throw std::runtime_error("read_csv: short row");
            return field;
        };
        r.ell = std::stoi(next());
        r.nodes = static_cast<std::size_t>(std::stoull(next()));
        r.h = std::stod(next());
        const double re = std::stod(next());
        const double im = std::stod(next());
        r.value = Complex(re, im);
        r.abs_err = std::stod(next());
        r.rel_err = std::stod(next());
        std::getline(ls, field, ',');
        r.eoc = field.empty() ? std::numeric_limits<double>::quiet_NaN() : std::stod(field);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace ifsq
