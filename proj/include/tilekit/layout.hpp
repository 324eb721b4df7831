#pragma once

#include "tilekit/tile.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tilekit {

/// Stabilizer placement at an anchor vertex: both types, X only, or Z only.
/// Rendered black / red / blue.
enum class AnchorRole : std::uint8_t { Both, XOnly, ZOnly };

using Anchor = std::pair<int, int>;

enum class LayoutKind : std::uint8_t { Unrotated, Rotated, Custom };

/// Per-side boundary layer counts for the unrotated layout. The construction
/// uses B-1 layers on every side; fewer layers still validates (weaker code),
/// one-sided variants recover the small surface-code figures.
struct BoundaryLayers {
    int x_bottom = -1; // -1 means "use the default H-1 (X) / W-1 (Z)"
    int x_top = -1;
    int z_left = -1;
    int z_right = -1;

    static BoundaryLayers defaults() { return {}; }
    static BoundaryLayers symmetric(int x_layers, int z_layers) {
        return {x_layers, x_layers, z_layers, z_layers};
    }
    static BoundaryLayers one_sided(int x_bottom, int z_right) {
        return {x_bottom, 0, 0, z_right};
    }
};

/// Anchor positions with roles plus the derived qubit edge set (the union of
/// the boxes of all Both-anchors). Anchors are kept sorted by (y, x), which
/// fixes the check-row order of every built code.
struct Layout {
    int box_w = 0;
    int box_h = 0;
    std::vector<std::pair<Anchor, AnchorRole>> anchors; // sorted by (y, x)
    std::vector<EdgeCoord> qubit_edges;                 // sorted canonically

    LayoutKind kind = LayoutKind::Custom;
    // Generator parameters, kept for serialization.
    int L = 0, M = 0, r = 0;
    BoundaryLayers layers;

    std::vector<Anchor> anchors_with_role(AnchorRole role) const;
    /// Anchors carrying an X (resp. Z) stabilizer, sorted by (y, x).
    std::vector<Anchor> x_anchors() const;
    std::vector<Anchor> z_anchors() const;
    std::size_t count(AnchorRole role) const;
    bool has_qubit(const EdgeCoord& e) const;
};

/// Union of the W x H boxes anchored at the given vertices, sorted
/// canonically. Throws on an empty anchor set.
std::vector<EdgeCoord> derive_qubits(const std::vector<Anchor>& bulk_anchors, int box_w,
                                     int box_h);

/// L x M bulk block with X-layer rows below/above and Z-layer columns
/// left/right of it. Defaults place H-1 X-layers and W-1 Z-layers per side.
Layout unrotated_layout(int L, int M, int box_w, int box_h,
                        BoundaryLayers layers = BoundaryLayers::defaults());

/// Diamond bulk {|x|+|y| <= r} with staircase boundaries. Defined for square
/// boxes only. The staircase rule is validated at construction; failure is a
/// hard error rather than a silent fix.
Layout rotated_layout(int r, int box_size);

/// Arbitrary anchor/role map over a W x H box; qubits derived from the
/// Both-anchors. Not validated on construction.
Layout custom_layout(int box_w, int box_h, const std::map<Anchor, AnchorRole>& anchors);

/// Tile-agnostic overlap rule: every pair of an X-role and a Z-role anchor
/// with at least one of them on the boundary must have box intersection
/// either empty or entirely inside the qubit edge set. Reports the
/// lexicographically-first failing pair.
ValidationResult validate_layout(const Layout& layout);

} // namespace tilekit
