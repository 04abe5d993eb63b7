#pragma once

#include <span>
#include <string>

#include "zb/graph.hpp"

namespace zb::cli {

// Rows from y = m down to 1, 'W' white and '.' black, one trailing newline.
std::string render_ascii(int m, int n, std::span<const Cell> white);

// Grid snapshot; with `overlay`, the staircase of every side that has a white
// boundary vertex is drawn on top.
std::string render_svg(int m, int n, std::span<const Cell> white, bool overlay);

}  // namespace zb::cli
