#pragma once

#include "polychrome/labeling.hpp"

#include <string>

namespace polychrome {

/// One glyph per colour ("0-9a-zA-Z"). Axis 0 runs left to right, axis 1 bottom
/// to top, so the first printed line is the row with the largest x_1.
std::string render_ascii(const Labeling& c);

/// Dots on a grid, one fill per colour from a fixed palette (colour 0 blue,
/// 1 red, 2 purple, 3 green, then further ColorBrewer hues). Same orientation as
/// render_ascii.
std::string render_svg(const Labeling& c);

}  // namespace polychrome
