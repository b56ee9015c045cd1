#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ifsquad/kernel_helmholtz.hpp"
#include "ifsquad/presets.hpp"

namespace ifsq {

/// A convergence study: one kernel evaluated on a ladder of resolutions, with
/// errors measured against a finer reference or a supplied exact value.
struct ExperimentConfig {
    std::string preset_spec;               // named attractor, e.g. "cantor(1/3)"
    std::optional<Attractor> attractor;    // inline IFS; overrides the preset

    std::string kernel = "phi_t";          // phi_t | helmholtz | cos
    std::string mode = "double";           // double | fixed-point | single
    double t = 0.0;                        // phi_t exponent
    int fixed_point_map = 1;               // map index for fixed-point mode
    double wavenumber = 5.0;               // helmholtz
    double c_osc = 2.0 * std::numbers::pi; // helmholtz oscillation threshold
    double cos_freq = 1.0;                 // frequency of the smooth test integrand

    std::vector<int> levels;               // study levels (each maps to h = diam * rho^ell)
    std::vector<double> h_values;          // explicit h ladder; overrides levels
    int reference_level = -1;
    std::optional<double> reference_h;
    std::optional<Complex> exact;          // exact value; overrides the computed reference

    bool symmetry_halving = true;
    bool strict = false;
};

struct ConvergenceRow {
    int ell = 0;
    std::size_t nodes = 0;
    double h = 0.0;
    Complex value;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double eoc = 0.0;  // NaN on the first row
};

struct ConvergenceReport {
    std::string preset;
    std::string kernel_desc;
    Complex reference;
    double wall_seconds = 0.0;
    std::vector<ConvergenceRow> rows;
};

/// Runs the study in increasing resolution order. Errors are measured against
/// the supplied exact value when present, otherwise against the same rule at
/// the reference resolution (which must be strictly finer than every study
/// level).
ConvergenceReport run_convergence(const ExperimentConfig& config);

/// CSV with header ell,N,h,value_re,value_im,abs_err,rel_err,eoc; the eoc
/// field is blank on the first row. Deterministic byte-for-byte.
void emit_csv(const ConvergenceReport& report, std::ostream& out);

/// Two columns (N, abs_err) for external log-log plotting.
void emit_plot_data(const ConvergenceReport& report, std::ostream& out);

/// Reads rows back from the CSV emitted above.
std::vector<ConvergenceRow> read_csv(std::istream& in);

}  // namespace ifsq
