#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifsquad/ifs.hpp"

namespace ifsq {

/// A named attractor together with the exactly known metadata attached to it.
/// Measures follow the normalised convention (measure 1) unless the exact
/// value equals it; exactly known values are reported in exact_measure.
struct Preset {
    std::string name;
    Attractor attractor;
    std::optional<double> exact_measure;  // known exact total measure, if any
    std::string description;
};

/// Looks up a preset. Parameterised families take the ratio in parentheses,
/// e.g. "cantor(1/3)" or "cantor-dust(0.2501)"; plain fractions and decimals
/// are both accepted.
Preset preset(const std::string& spec);

std::vector<std::string> preset_names();

}  // namespace ifsq
