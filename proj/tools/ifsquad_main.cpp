// Command-line front end: preset attractors, dimensions, barycentres,
// partitions, separation parameters, single integrals and convergence
// studies, with CSV/plot-data output.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ifsquad/convergence.hpp"
#include "ifsquad/geometry.hpp"
#include "ifsquad/kernel_helmholtz.hpp"
#include "ifsquad/kernel_phi_t.hpp"
#include "ifsquad/partition.hpp"
#include "ifsquad/presets.hpp"
#include "ifsquad/quadrature.hpp"

namespace {

using ifsq::Attractor;
using ifsq::Complex;
using ifsq::Vec;

struct AttractorArgs {
    std::string preset;
    std::vector<std::string> maps;  // "ratio,angle_deg,dx,dy" (2-d) or "ratio,sign,dx" (1-d)
    int ambient_dim = 2;
    std::optional<double> measure;
    std::optional<double> diam;
};

void add_attractor_options(CLI::App* cmd, AttractorArgs& args) {
    cmd->add_option("--preset", args.preset, "named attractor, e.g. cantor(1/3); see `presets`");
    cmd->add_option("--map", args.maps,
                    "inline similarity `ratio,angle_deg,dx,dy` (2-d) or `ratio,sign,dx` (1-d); repeatable");
    cmd->add_option("--ambient", args.ambient_dim, "ambient dimension of inline maps (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    cmd->add_option("--measure", args.measure, "total measure override for inline maps");
    cmd->add_option("--diam", args.diam, "diameter override for inline maps");
}

std::vector<double> parse_numbers(const std::string& spec) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t next = spec.find(',', pos);
        if (next == std::string::npos) next = spec.size();
        out.push_back(std::stod(spec.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

Attractor resolve_attractor(const AttractorArgs& args) {
    if (!args.maps.empty()) {
        std::vector<ifsq::Similarity> maps;
        for (const std::string& spec : args.maps) {
            const std::vector<double> v = parse_numbers(spec);
            if (args.ambient_dim == 1) {
                if (v.size() != 3) throw std::out_of_range("--map for 1-d needs `ratio,sign,dx`");
                maps.push_back(ifsq::similarity1(v[0], v[2], v[1] < 0 ? -1.0 : 1.0));
            } else {
                if (v.size() != 4) throw std::out_of_range("--map for 2-d needs `ratio,angle_deg,dx,dy`");
                maps.push_back(ifsq::similarity2(v[0], v[1] * std::numbers::pi / 180.0, v[2], v[3]));
            }
        }
        return ifsq::make_attractor(std::move(maps), args.ambient_dim, args.measure, args.diam);
    }
    if (args.preset.empty()) throw std::out_of_range("no attractor given: use --preset or --map");
    return ifsq::preset(args.preset).attractor;
}

struct KernelArgs {
    std::string kernel = "phi_t";
    std::string mode = "double";
    double t = 0.0;
    int fixed_point_map = 1;
    double wavenumber = 5.0;
    double c_osc = 2.0 * std::numbers::pi;
    double cos_freq = 1.0;
    bool no_halving = false;
    bool strict = false;
};

void add_kernel_options(CLI::App* cmd, KernelArgs& args) {
    cmd->add_option("--kernel", args.kernel, "phi_t | helmholtz | cos")
        ->check(CLI::IsMember({"phi_t", "helmholtz", "cos"}));
    cmd->add_option("--mode", args.mode, "double | fixed-point | single")
        ->check(CLI::IsMember({"double", "fixed-point", "single"}));
    cmd->add_option("--t", args.t, "phi_t exponent (0 selects the log kernel)");
    cmd->add_option("--m", args.fixed_point_map, "map index for fixed-point mode");
    cmd->add_option("--k", args.wavenumber, "helmholtz wavenumber");
    cmd->add_option("--c-osc", args.c_osc, "helmholtz oscillation threshold");
    cmd->add_option("--cos-freq", args.cos_freq, "frequency of the cos test integrand");
    cmd->add_flag("--no-halving", args.no_halving, "disable symmetry halving");
    cmd->add_flag("--strict", args.strict, "treat precondition warnings as errors");
}

double resolve_h(const Attractor& a, std::optional<double> h, std::optional<int> ell) {
    if (h && ell) throw std::out_of_range("give either --h or --ell, not both");
    if (h) return *h;
    if (ell) return ifsq::level_parameter(a, *ell);
    throw std::out_of_range("missing resolution: give --h or --ell");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::ios_base::failure("cannot open output file '" + path + "'");
    return file;
}

int run(int argc, char** argv) {
    CLI::App app{"quadrature on self-similar fractal sets"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep --h free for the partition parameter
    app.set_config("--config", "", "read options from a key=value file");

    CLI::App* presets_cmd = app.add_subcommand("presets", "list the named attractors");

    AttractorArgs dim_args;
    std::string dim_ratios;
    CLI::App* dim_cmd = app.add_subcommand("dimension", "solve for the similarity dimension");
    add_attractor_options(dim_cmd, dim_args);
    dim_cmd->add_option("--ratios", dim_ratios, "comma-separated contraction ratios");

    AttractorArgs bc_args;
    CLI::App* bc_cmd = app.add_subcommand("barycentre", "barycentre of the attractor");
    add_attractor_options(bc_cmd, bc_args);

    AttractorArgs part_args;
    std::optional<double> part_h;
    std::optional<int> part_ell;
    bool part_nodes = false;
    CLI::App* part_cmd = app.add_subcommand("partition", "diameter-graded partition and rule");
    add_attractor_options(part_cmd, part_args);
    part_cmd->add_option("--h", part_h, "partition parameter");
    part_cmd->add_option("--ell", part_ell, "resolution level (h = diam * rho_max^ell)");
    part_cmd->add_flag("--nodes", part_nodes, "emit one row per node with weights");

    AttractorArgs sep_args;
    std::optional<double> sep_h;
    std::optional<int> sep_ell;
    int sep_depth = 0;
    CLI::App* sep_cmd = app.add_subcommand("separation", "separation parameters at scale h");
    add_attractor_options(sep_cmd, sep_args);
    sep_cmd->add_option("--h", sep_h, "partition parameter");
    sep_cmd->add_option("--ell", sep_ell, "resolution level");
    sep_cmd->add_option("--cloud-depth", sep_depth, "refinement depth of the set-distance clouds");

    AttractorArgs int_args;
    KernelArgs int_kernel;
    std::optional<double> int_h;
    std::optional<int> int_ell;
    CLI::App* int_cmd = app.add_subcommand("integrate", "evaluate one quadrature value");
    add_attractor_options(int_cmd, int_args);
    add_kernel_options(int_cmd, int_kernel);
    int_cmd->add_option("--h", int_h, "partition parameter");
    int_cmd->add_option("--ell", int_ell, "resolution level");

    AttractorArgs conv_args;
    KernelArgs conv_kernel;
    std::string conv_levels;
    int conv_ref = -1;
    std::optional<double> conv_ref_h;
    std::optional<double> conv_exact_re, conv_exact_im;
    std::string conv_out;
    std::string conv_format = "csv";
    CLI::App* conv_cmd = app.add_subcommand("convergence", "run a convergence study");
    add_attractor_options(conv_cmd, conv_args);
    add_kernel_options(conv_cmd, conv_kernel);
    conv_cmd->add_option("--levels", conv_levels, "level ladder, `first:last` or `l1,l2,...`")
        ->required();
    conv_cmd->add_option("--ref-level", conv_ref, "reference level (finer than every study level)");
    conv_cmd->add_option("--ref-h", conv_ref_h, "reference partition parameter");
    conv_cmd->add_option("--exact-re", conv_exact_re, "exact reference value, real part");
    conv_cmd->add_option("--exact-im", conv_exact_im, "exact reference value, imaginary part");
    conv_cmd->add_option("--out", conv_out, "output path (stdout when omitted)");
    conv_cmd->add_option("--format", conv_format, "csv | plot-data")
        ->check(CLI::IsMember({"csv", "plot-data"}));

    app.parse(argc, argv);

    if (presets_cmd->parsed()) {
        std::printf("name,dim,measure,diam,description\n");
        for (const std::string& name : ifsq::preset_names()) {
            std::string instance = name;
            const auto open = instance.find("(rho)");
            if (open != std::string::npos) instance = instance.substr(0, open) + "(1/3)";
            const ifsq::Preset p = ifsq::preset(instance);
            std::printf("%s,%.12g,%.12g,%.12g,%s\n", name.c_str(), p.attractor.dim,
                        p.attractor.measure, p.attractor.diam, p.description.c_str());
        }
        return 0;
    }

    if (dim_cmd->parsed()) {
        if (!dim_ratios.empty())
            std::printf("%.15g\n", ifsq::solve_dimension(parse_numbers(dim_ratios)));
        else
            std::printf("%.15g\n", resolve_attractor(dim_args).dim);
        return 0;
    }

    if (bc_cmd->parsed()) {
        const Attractor a = resolve_attractor(bc_args);
        const Vec bc = ifsq::barycentre(a);
        if (a.ambient_dim == 1)
            std::printf("%.16e\n", bc[0]);
        else
            std::printf("%.16e %.16e\n", bc[0], bc[1]);
        return 0;
    }

    if (part_cmd->parsed()) {
        const Attractor a = resolve_attractor(part_args);
        const double h = resolve_h(a, part_h, part_ell);
        const ifsq::Partition p = ifsq::partition_lh(a, h);
        if (!part_nodes) {
            std::printf("N,h\n%zu,%.16e\n", p.size(), h);
            return 0;
        }
        const ifsq::QuadratureRule rule = ifsq::rule_from_partition(p);
        std::printf(a.ambient_dim == 1 ? "index,x,weight\n" : "index,x,y,weight\n");
        const char* separator = a.map_count() > 9 ? "." : "";
        for (std::size_t i = 0; i < rule.size(); ++i) {
            std::string idx;
            for (int m : p.indices[i]) {
                if (!idx.empty()) idx += separator;
                idx += std::to_string(m);
            }
            if (a.ambient_dim == 1)
                std::printf("%s,%.16e,%.16e\n", idx.c_str(), rule.nodes[i][0], rule.weights[i]);
            else
                std::printf("%s,%.16e,%.16e,%.16e\n", idx.c_str(), rule.nodes[i][0], rule.nodes[i][1],
                            rule.weights[i]);
        }
        return 0;
    }

    if (sep_cmd->parsed()) {
        const Attractor a = resolve_attractor(sep_args);
        const double h = resolve_h(a, sep_h, sep_ell);
        ifsq::SeparationOptions opts;
        if (sep_depth > 0) opts.cloud_depth = sep_depth;
        const ifsq::SeparationReport rep = ifsq::separation_params(a, h, opts);
        std::printf("r_gamma,%.16e\n", rep.r_gamma);
        std::printf("r_gamma_error_band,%.16e\n", rep.r_gamma_error);
        std::printf("r_gamma_hull,%.16e\n", rep.r_gamma_hull);
        std::printf("r_gamma_hull_h,%.16e\n", rep.r_gamma_hull_h);
        for (std::size_t m = 0; m < rep.r_m_h.size(); ++m)
            std::printf("r_%zu_h,%.16e\n", m + 1, rep.r_m_h[m]);
        std::printf("min_r_m_h,%.16e\n", rep.min_r_m_h());
        return 0;
    }

    auto fill_config = [](ifsq::ExperimentConfig& cfg, const KernelArgs& k) {
        cfg.kernel = k.kernel;
        cfg.mode = k.mode;
        cfg.t = k.t;
        cfg.fixed_point_map = k.fixed_point_map;
        cfg.wavenumber = k.wavenumber;
        cfg.c_osc = k.c_osc;
        cfg.cos_freq = k.cos_freq;
        cfg.symmetry_halving = !k.no_halving;
        cfg.strict = k.strict;
    };

    if (int_cmd->parsed()) {
        const Attractor a = resolve_attractor(int_args);
        const double h = resolve_h(a, int_h, int_ell);
        ifsq::ExperimentConfig cfg;
        cfg.attractor = a;
        fill_config(cfg, int_kernel);
        if (cfg.kernel == "cos" && int_cmd->count("--mode") == 0) cfg.mode = "single";
        cfg.h_values = {h};
        cfg.exact = Complex(0.0, 0.0);  // reference unused for a single value
        const ifsq::ConvergenceReport rep = ifsq::run_convergence(cfg);
        std::printf("%.16e %.16e\n", rep.rows.front().value.real(), rep.rows.front().value.imag());
        return 0;
    }

    if (conv_cmd->parsed()) {
        ifsq::ExperimentConfig cfg;
        if (!conv_args.maps.empty() || conv_args.preset.empty())
            cfg.attractor = resolve_attractor(conv_args);
        else
            cfg.preset_spec = conv_args.preset;
        fill_config(cfg, conv_kernel);
        const auto colon = conv_levels.find(':');
        if (colon != std::string::npos) {
            const int first = std::stoi(conv_levels.substr(0, colon));
            const int last = std::stoi(conv_levels.substr(colon + 1));
            for (int ell = first; ell <= last; ++ell) cfg.levels.push_back(ell);
        } else {
            for (double v : parse_numbers(conv_levels)) cfg.levels.push_back(static_cast<int>(v));
        }
        cfg.reference_level = conv_ref;
        cfg.reference_h = conv_ref_h;
        if (conv_exact_re || conv_exact_im)
            cfg.exact = Complex(conv_exact_re.value_or(0.0), conv_exact_im.value_or(0.0));
        const ifsq::ConvergenceReport rep = ifsq::run_convergence(cfg);
        std::ofstream file;
        std::ostream& out = open_output(file, conv_out);
        if (conv_format == "csv")
            ifsq::emit_csv(rep, out);
        else
            ifsq::emit_plot_data(rep, out);
        out.flush();
        if (!conv_out.empty() && !file) throw std::ios_base::failure("write failed");
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "ifsquad: i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::out_of_range& e) {
        std::cerr << "ifsquad: config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ifsquad: precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "ifsquad: precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "ifsquad: error: " << e.what() << "\n";
        return 1;
    }
}
