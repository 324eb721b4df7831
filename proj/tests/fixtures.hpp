#pragma once

#include "tilekit/layout.hpp"
#include "tilekit/tile.hpp"

#include <vector>

// The published tile shapes used across the unit and acceptance suites.

namespace fixtures {

using tilekit::Tile;
using tilekit::TilePair;

// Surface-code tiles (B = 2): vertex operator as the X-tile, plaquette as Z.
inline Tile surface_x_tile() { return Tile(2, 2, {{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}); }
inline TilePair surface_pair() { return TilePair::from_x_tile(surface_x_tile()); }

// The d in {3,4,5} unrotated surface-code layouts: one X layer below, one Z
// layer to the right of a (d-1) x (d-1) bulk.
inline tilekit::Layout surface_layout(int d) {
    return tilekit::unrotated_layout(d - 1, d - 1, 2, 2, tilekit::BoundaryLayers::one_sided(1, 1));
}

// Published [[n,k,d]] rows: weight-6 and weight-8 tiles in 3x3 boxes on a
// 10x10 bulk, weight-8 tiles in 4x4 boxes on 9x9 and 13x13 bulks.
inline Tile table1_row1_x() { return Tile(3, 3, {{0, 0}, {2, 1}, {2, 2}}, {{0, 2}, {1, 2}, {2, 0}}); }
inline Tile table1_row2_x() {
    return Tile(3, 3, {{0, 0}, {0, 1}, {0, 2}, {2, 0}}, {{0, 0}, {0, 2}, {1, 1}, {2, 2}});
}
inline Tile table1_row34_x() {
    return Tile(4, 4, {{0, 0}, {0, 3}, {2, 2}, {3, 0}}, {{0, 1}, {1, 0}, {1, 1}, {3, 3}});
}
// The randomized-search weight-10 example in a 4x4 box.
inline Tile weight10_x() {
    return Tile(4, 4, {{0, 0}, {1, 0}, {2, 1}, {2, 3}, {3, 0}},
                {{0, 3}, {1, 0}, {3, 1}, {3, 2}, {3, 3}});
}

// All eight weight-6 pairs achieving [[288,8,12]] (X-tiles; Z is the dual).
inline std::vector<Tile> table2_w6_tiles() {
    return {
        Tile(3, 3, {{0, 0}, {0, 1}, {2, 2}}, {{0, 2}, {1, 0}, {2, 0}}),
        Tile(3, 3, {{0, 0}, {0, 1}, {2, 2}}, {{0, 2}, {1, 2}, {2, 0}}),
        Tile(3, 3, {{0, 0}, {1, 0}, {2, 2}}, {{0, 1}, {0, 2}, {2, 0}}),
        Tile(3, 3, {{0, 0}, {1, 0}, {2, 2}}, {{0, 2}, {2, 0}, {2, 1}}),
        Tile(3, 3, {{0, 0}, {1, 2}, {2, 2}}, {{0, 1}, {0, 2}, {2, 0}}),
        Tile(3, 3, {{0, 0}, {1, 2}, {2, 2}}, {{0, 2}, {2, 0}, {2, 1}}),
        Tile(3, 3, {{0, 0}, {2, 1}, {2, 2}}, {{0, 2}, {1, 0}, {2, 0}}),
        Tile(3, 3, {{0, 0}, {2, 1}, {2, 2}}, {{0, 2}, {1, 2}, {2, 0}}),
    };
}

// Four selected weight-8 pairs achieving [[288,8,14]].
inline std::vector<Tile> table3_w8_tiles() {
    return {
        Tile(3, 3, {{0, 0}, {0, 1}, {0, 2}, {2, 0}}, {{0, 0}, {0, 1}, {1, 1}, {2, 2}}),
        Tile(3, 3, {{0, 0}, {0, 1}, {0, 2}, {2, 0}}, {{0, 0}, {0, 2}, {1, 1}, {2, 2}}),
        Tile(3, 3, {{0, 0}, {0, 1}, {0, 2}, {2, 0}}, {{0, 0}, {2, 1}, {1, 2}, {2, 2}}),
        Tile(3, 3, {{0, 0}, {0, 1}, {0, 2}, {2, 0}}, {{0, 1}, {1, 0}, {1, 1}, {2, 2}}),
    };
}

inline tilekit::Layout bulk10_b3() { return tilekit::unrotated_layout(10, 10, 3, 3); }
inline tilekit::Layout bulk9_b4() { return tilekit::unrotated_layout(9, 9, 4, 4); }
inline tilekit::Layout bulk13_b4() { return tilekit::unrotated_layout(13, 13, 4, 4); }

} // namespace fixtures
