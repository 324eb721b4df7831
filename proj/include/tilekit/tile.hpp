#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tilekit {

enum class Orientation : std::uint8_t { H, V };

/// A unit lattice edge. H(x,y) runs from vertex (x,y) to (x+1,y), V(x,y)
/// from (x,y) to (x,y+1). Coordinates may be negative in the layout frame.
struct EdgeCoord {
    Orientation o;
    int x;
    int y;

    /// Canonical order (H before V, then y, then x); also the qubit column
    /// order of every exported matrix.
    friend constexpr auto operator<=>(const EdgeCoord& a, const EdgeCoord& b) {
        if (auto c = a.o <=> b.o; c != 0)
            return c;
        if (auto c = a.y <=> b.y; c != 0)
            return c;
        return a.x <=> b.x;
    }
    friend constexpr bool operator==(const EdgeCoord&, const EdgeCoord&) = default;
};

std::string to_string(const EdgeCoord& e);

using EdgeXY = std::pair<int, int>;

/// Edge subset of a W x H box. Edges with 0 <= x < W, 0 <= y < H; the box's
/// top horizontal row (y = H) and right vertical column (x = W) are not
/// representable, which is exactly the confinement rule for tiles.
class Tile {
public:
    Tile() = default;
    /// Sorts and deduplicates; throws std::invalid_argument if an edge falls
    /// outside the box or the box is degenerate.
    Tile(int width, int height, std::vector<EdgeXY> h_edges, std::vector<EdgeXY> v_edges);

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<EdgeXY>& h_edges() const { return h_edges_; }
    const std::vector<EdgeXY>& v_edges() const { return v_edges_; }

    std::size_t weight() const { return h_edges_.size() + v_edges_.size(); }
    bool empty() const { return h_edges_.empty() && v_edges_.empty(); }

    /// All edges as EdgeCoord, sorted canonically.
    std::vector<EdgeCoord> edges() const;
    /// Edges translated by an anchor offset.
    std::vector<EdgeCoord> edges_at(int ax, int ay) const;

    friend bool operator==(const Tile&, const Tile&) = default;
    friend auto operator<=>(const Tile&, const Tile&) = default;

private:
    int width_ = 0, height_ = 0;
    std::vector<EdgeXY> h_edges_, v_edges_;
};

/// Point reflection + orientation swap: h-edge (x,y) becomes v-edge
/// (W-1-x, H-1-y) and vice versa. An involution.
Tile dual_tile(const Tile& t);

struct TilePair {
    Tile x_tile;
    Tile z_tile;

    static TilePair from_x_tile(Tile x) {
        Tile z = dual_tile(x);
        return {std::move(x), std::move(z)};
    }

    int width() const { return x_tile.width(); }
    int height() const { return x_tile.height(); }
};

struct ValidationResult {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
    static ValidationResult accept() { return {}; }
    static ValidationResult reject(std::string msg) { return {false, std::move(msg)}; }
};

/// Accepts iff both tiles are nonempty, share a box, and z equals the dual of
/// x. A rejection names the first offending edge.
ValidationResult validate_tile_pair(const TilePair& p);

struct OverlapParity {
    int count = 0;
    int parity = 0;
};

/// Overlap of x_tile anchored at (0,0) with z_tile anchored at (dx,dy).
OverlapParity overlap_parity(const TilePair& p, int dx, int dy);

/// C(n, k) in 64 bits; throws std::overflow_error when the count does not fit.
std::uint64_t binomial(unsigned n, unsigned k);

/// Streams every weight-w tile in a W x H box exactly once, in lexicographic
/// order of the edge-index combination (edges indexed canonically). Workers
/// can partition the range deterministically via seek().
class TileEnumerator {
public:
    TileEnumerator(int width, int height, int weight);

    std::uint64_t count() const { return count_; }
    std::uint64_t position() const { return position_; }

    /// Jump to the combination of the given lexicographic rank.
    void seek(std::uint64_t rank);

    std::optional<Tile> next();
    /// Advance without materializing a Tile; returns false when exhausted.
    bool advance();
    Tile current() const;

private:
    int width_, height_, weight_;
    std::uint64_t count_ = 0;
    std::uint64_t position_ = 0; // rank of the combination indices_ holds
    bool fresh_ = true;          // indices_ not yet consumed
    std::vector<unsigned> indices_;

    Tile tile_from_indices() const;
};

/// Bit lists: coefficient of x^i (resp. y^j) at index i. Built by
/// parse_polynomial; degrees must be >= 1.
struct PolynomialSpec {
    std::vector<std::uint8_t> a;
    std::vector<std::uint8_t> b;

    int deg_a() const { return static_cast<int>(a.size()) - 1; }
    int deg_b() const { return static_cast<int>(b.size()) - 1; }
};

/// Parses sums of monomials with 0/1 coefficients: "1", "x", "x^3",
/// "1 + x + x^2". Only `var` is accepted as the indeterminate; anything else
/// is rejected with the offending position.
std::vector<std::uint8_t> parse_polynomial(const std::string& text, char var);

/// Tiles of the planar hypergraph-product family. Box is
/// (deg a + 1) x (deg b + 1); the X-tile takes h-edge (i, H-1) per set a_i
/// and v-edge (W-1, H-1-j) per set b_j; the Z-tile is its dual, which lands
/// the a-coefficients on bottom v-edges and the b-coefficients on leftmost
/// h-edges.
TilePair tiles_from_polynomials(const PolynomialSpec& spec);

} // namespace tilekit
