#pragma once

#include <cstdint>
#include <string>

#include "hexid/code.hpp"
#include "hexid/vertex.hpp"

namespace hexid {

inline constexpr std::int64_t kMaxRenderArea = 1'000'000;

// Character map of the window, rows printed top (y1) to bottom (y0):
// '#' codeword, 'o' non-codeword on a C' row, '.' anything else.
std::string render_text(const Window& w, const CodeParams& p);

// Brick-wall drawing of the window: every horizontal edge, the vertical
// edge (x,y)-(x,y+1) exactly when x+y is even, a filled circle on each
// codeword and a hollow circle on each C'-row non-codeword. One SVG
// element per vertex and per edge.
std::string render_svg(const Window& w, const CodeParams& p);

}  // namespace hexid
