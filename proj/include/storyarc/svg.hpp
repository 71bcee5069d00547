#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "storyarc/arcs.hpp"

namespace storyarc {

struct SvgStyle {
    int width = 860;
    int height = 420;
    std::string actor_color = "blue";
    std::string experiencer_color = "red";
    bool mark_extrema = true;
    double min_prominence = 0.0;  // absolute; 0 disables markers
};

struct SvgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic plot of a character arc: blue actor polyline, red
// experiencer polyline, x = character-local event ordinal, y = smoothed t.
// Throws SvgError when both series are empty.
std::string render_arc_svg(const CharacterArc& arc, const std::string& character_name,
                           const SvgStyle& style = {});

}  // namespace storyarc
