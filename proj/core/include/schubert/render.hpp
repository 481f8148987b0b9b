#pragma once

#include <string>

#include "schubert/engine.hpp"
#include "schubert/pieces.hpp"

namespace schubert {

enum class RenderFormat { Ascii, Svg };

// Deterministic drawing of a filling.  The SVG shades equivariant rhombi and
// marks gashed edges; the ASCII form annotates every edge label.
std::string render(const Filling& f, const PieceSet& ps, RenderFormat format);

// SVG frame of one degeneration step: the filling with cells outside the
// step's staircase (and its dangling composite halves) greyed out.
std::string render_trace_frame(const Filling& f, const PieceSet& ps, int step);

}  // namespace schubert
