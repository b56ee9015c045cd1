#include "ifsquad/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ifsq {

namespace {

double parse_ratio(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(s.substr(0, slash));
            const double den = std::stod(s.substr(slash + 1));
            if (den == 0.0) throw std::out_of_range("zero denominator");
            return num / den;
        }
        return std::stod(s);
    } catch (const std::exception&) {
        throw std::out_of_range("preset: cannot parse ratio '" + s + "'");
    }
}

/// Splits "name(arg)" into name and optional arg.
std::pair<std::string, std::optional<std::string>> split_spec(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return {spec, std::nullopt};
    if (spec.back() != ')') throw std::out_of_range("preset: malformed spec '" + spec + "'");
    return {spec.substr(0, open), spec.substr(open + 1, spec.size() - open - 2)};
}

std::vector<Similarity> dust_maps(double rho) {
    return {
        similarity2(rho, 0.0, 0.0, 1.0 - rho),
        similarity2(rho, 0.0, 1.0 - rho, 1.0 - rho),
        similarity2(rho, 0.0, 0.0, 0.0),
        similarity2(rho, 0.0, 1.0 - rho, 0.0),
    };
}

}  // namespace

Preset preset(const std::string& spec) {
    const auto [name, arg] = split_spec(spec);
    constexpr double pi = std::numbers::pi;

    if (name == "interval") {
        Preset p;
        p.name = spec;
        p.attractor = make_attractor({similarity1(0.5, 0.0), similarity1(0.5, 0.5)}, 1, 1.0, 1.0);
        p.exact_measure = 1.0;
        p.description = "unit interval as the ratio-1/2 two-map attractor";
        return p;
    }
    if (name == "cantor") {
        const double rho = arg ? parse_ratio(*arg) : 1.0 / 3.0;
        if (!(rho > 0.0 && rho < 0.5)) throw std::out_of_range("preset cantor: ratio must lie in (0,1/2)");
        Preset p;
        p.name = spec;
        p.attractor = make_attractor({similarity1(rho, 0.0), similarity1(rho, 1.0 - rho)}, 1, 1.0, 1.0);
        p.exact_measure = 1.0;
        p.description = "Cantor set with contraction ratio " + std::to_string(rho);
        return p;
    }
    if (name == "cantor-dust") {
        const double rho = arg ? parse_ratio(*arg) : 1.0 / 3.0;
        if (!(rho > 0.0 && rho < 0.5))
            throw std::out_of_range("preset cantor-dust: ratio must lie in (0,1/2)");
        Preset p;
        p.name = spec;
        p.attractor = make_attractor(dust_maps(rho), 2, 1.0, std::sqrt(2.0));
        if (rho <= 0.25) p.exact_measure = std::pow(2.0, 0.5 * p.attractor.dim);
        p.description = "planar Cantor dust with contraction ratio " + std::to_string(rho) +
                        " (normalised measure)";
        return p;
    }
    if (name == "table1-II") {
        const double rho = 0.41;
        const double s3x = 0.5 * (1.0 - rho), s3y = 0.5 * std::sqrt(3.0) * (1.0 - rho);
        const double s4y = (1.0 - rho) / (2.0 * std::sqrt(3.0));
        Preset p;
        p.name = spec;
        p.attractor = make_attractor({similarity2(rho, 0.0, 0.0, 0.0), similarity2(rho, 0.0, 1.0 - rho, 0.0),
                                      similarity2(rho, 0.0, s3x, s3y), similarity2(rho, 0.0, s3x, s4y)},
                                     2, 1.0, 1.0);
        p.description = "four-map triangle-and-centre attractor, disjoint but not hull-disjoint";
        return p;
    }
    if (name == "table1-III") {
        auto maps = dust_maps(1.0 / 3.0);
        maps.push_back(similarity2(1.0 / 27.0, 0.0, 4.0 / 27.0, 4.0 / 27.0));
        Preset p;
        p.name = spec;
        p.attractor = make_attractor(std::move(maps), 2, 1.0, std::sqrt(2.0));
        p.description = "non-uniform dust with a small fifth component inside a corner hull";
        return p;
    }
    if (name == "vicsek") {
        auto maps = dust_maps(1.0 / 3.0);
        maps.push_back(similarity2(1.0 / 3.0, 0.0, 1.0 / 3.0, 1.0 / 3.0));
        Preset p;
        p.name = spec;
        p.attractor = make_attractor(std::move(maps), 2, 1.0, std::sqrt(2.0));
        p.description = "Vicsek cross, touching components (not disjoint)";
        return p;
    }
    if (name == "koch-snowflake") {
        std::vector<Similarity> maps;
        for (int m = 1; m <= 6; ++m) {
            const double alpha = (2.0 * m - 1.0) * pi / 6.0;
            maps.push_back(similarity2(1.0 / 3.0, 0.0, (2.0 / 3.0) * std::cos(alpha),
                                       (2.0 / 3.0) * std::sin(alpha)));
        }
        maps.push_back(similarity2(1.0 / std::sqrt(3.0), pi / 6.0, 0.0, 0.0));
        Preset p;
        p.name = spec;
        p.attractor = make_attractor(std::move(maps), 2, 1.0, 2.0);
        p.description = "filled Koch snowflake as a seven-map non-uniform attractor";
        return p;
    }
    if (name == "fig3-cantor") {
        Preset p;
        p.name = spec;
        p.attractor = make_attractor({similarity1(0.5, 0.0), similarity1(0.25, 0.75)}, 1, 1.0, 1.0);
        p.description = "non-uniform Cantor set with ratios 1/2 and 1/4";
        return p;
    }
    if (name == "eq62-nonuniform") {
        const Mat quarter_turn = Mat::rotation(pi / 2.0);
        Preset p;
        p.name = spec;
        p.attractor = make_attractor({Similarity(0.25, Mat::identity(2), Vec(0.0, 0.0)),
                                      Similarity(0.25, quarter_turn, Vec(0.75, 0.0)),
                                      Similarity(0.25, quarter_turn, Vec(0.0, 0.75)),
                                      Similarity(0.5, Mat::identity(2), Vec(0.5, 0.5))},
                                     2, 1.0, std::nullopt);
        p.description = "hull-disjoint non-uniform attractor with quarter-turn rotations";
        return p;
    }
    throw std::out_of_range("unknown preset '" + spec + "'");
}

std::vector<std::string> preset_names() {
    return {"interval",    "cantor(rho)",    "cantor-dust(rho)", "table1-II",       "table1-III",
            "vicsek",      "koch-snowflake", "fig3-cantor",      "eq62-nonuniform"};
}

}  // namespace ifsq
