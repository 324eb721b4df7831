#pragma once

#include "tilekit/layout.hpp"

#include <optional>
#include <string>

namespace tilekit {

struct TileHighlight {
    Anchor anchor;
    char type = 'X'; // which tile of the pair to place, 'X' or 'Z'
};

/// Deterministic SVG of a layout: gray segments for qubit edges, colored
/// anchor dots per role (black/red/blue). With a tile pair and a highlight, a
/// shaded box and the placed tile's edges are overlaid; edges the layout
/// truncates away are drawn dotted. Mathematical orientation (y up).
std::string render_svg(const Layout& layout, const TilePair* pair = nullptr,
                       const std::optional<TileHighlight>& highlight = std::nullopt);

} // namespace tilekit
