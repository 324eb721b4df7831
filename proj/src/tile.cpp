#include "tilekit/tile.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tilekit {

std::string to_string(const EdgeCoord& e) {
    return std::string(e.o == Orientation::H ? "H(" : "V(") + std::to_string(e.x) + "," +
           std::to_string(e.y) + ")";
}

namespace {

void sort_unique(std::vector<EdgeXY>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Tile::Tile(int width, int height, std::vector<EdgeXY> h_edges, std::vector<EdgeXY> v_edges)
    : width_(width), height_(height), h_edges_(std::move(h_edges)), v_edges_(std::move(v_edges)) {
    if (width_ < 1 || height_ < 1)
        throw std::invalid_argument("Tile: box must be at least 1x1");
    sort_unique(h_edges_);
    sort_unique(v_edges_);
    for (const auto& [x, y] : h_edges_)
        if (x < 0 || x >= width_ || y < 0 || y >= height_)
            throw std::invalid_argument("Tile: h-edge (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") outside the box");
    for (const auto& [x, y] : v_edges_)
        if (x < 0 || x >= width_ || y < 0 || y >= height_)
            throw std::invalid_argument("Tile: v-edge (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") outside the box");
}

std::vector<EdgeCoord> Tile::edges() const { return edges_at(0, 0); }

std::vector<EdgeCoord> Tile::edges_at(int ax, int ay) const {
    std::vector<EdgeCoord> out;
    out.reserve(weight());
    for (const auto& [x, y] : h_edges_)
        out.push_back({Orientation::H, x + ax, y + ay});
    for (const auto& [x, y] : v_edges_)
        out.push_back({Orientation::V, x + ax, y + ay});
    std::sort(out.begin(), out.end());
    return out;
}

Tile dual_tile(const Tile& t) {
    const int W = t.width(), H = t.height();
    std::vector<EdgeXY> h, v;
    h.reserve(t.v_edges().size());
    v.reserve(t.h_edges().size());
    for (const auto& [x, y] : t.v_edges())
        h.emplace_back(W - 1 - x, H - 1 - y);
    for (const auto& [x, y] : t.h_edges())
        v.emplace_back(W - 1 - x, H - 1 - y);
    return Tile(W, H, std::move(h), std::move(v));
}

ValidationResult validate_tile_pair(const TilePair& p) {
    if (p.x_tile.empty() || p.z_tile.empty())
        return ValidationResult::reject("degenerate tile: empty edge set");
    if (p.x_tile.width() != p.z_tile.width() || p.x_tile.height() != p.z_tile.height())
        return ValidationResult::reject("tiles live in different boxes");
    const Tile expected = dual_tile(p.x_tile);
    if (p.z_tile == expected)
        return ValidationResult::accept();
    // Name the first edge where the Z-tile departs from the dual of X.
    const auto expect_edges = expected.edges();
    const auto got_edges = p.z_tile.edges();
    for (const auto& e : expect_edges)
        if (!std::binary_search(got_edges.begin(), got_edges.end(), e))
            return ValidationResult::reject("Z-tile is missing dual edge " + to_string(e));
    for (const auto& e : got_edges)
        if (!std::binary_search(expect_edges.begin(), expect_edges.end(), e))
            return ValidationResult::reject("Z-tile has extra edge " + to_string(e));
    return ValidationResult::reject("Z-tile is not the dual of the X-tile");
}

OverlapParity overlap_parity(const TilePair& p, int dx, int dy) {
    const auto xs = p.x_tile.edges_at(0, 0);
    const auto zs = p.z_tile.edges_at(dx, dy);
    int count = 0;
    for (const auto& e : xs)
        if (std::binary_search(zs.begin(), zs.end(), e))
            ++count;
    return {count, count & 1};
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        // r * num / i is exact at every step; guard the multiply.
        if (r > UINT64_MAX / num)
            throw std::overflow_error("binomial: count does not fit in 64 bits");
        r = r * num / i;
    }
    return r;
}

TileEnumerator::TileEnumerator(int width, int height, int weight)
    : width_(width), height_(height), weight_(weight) {
    if (width_ < 1 || height_ < 1)
        throw std::invalid_argument("TileEnumerator: box must be at least 1x1");
    const int total = 2 * width_ * height_;
    if (weight_ < 1 || weight_ > total)
        throw std::invalid_argument("TileEnumerator: weight " + std::to_string(weight_) +
                                    " out of range [1, " + std::to_string(total) + "]");
    count_ = binomial(static_cast<unsigned>(total), static_cast<unsigned>(weight_));
    indices_.resize(weight_);
    seek(0);
}

void TileEnumerator::seek(std::uint64_t rank) {
    if (rank > count_)
        throw std::out_of_range("TileEnumerator::seek: rank past the end");
    position_ = rank;
    fresh_ = true;
    if (rank == count_)
        return;
    // Combinatorial number system, lexicographic unranking.
    const unsigned total = static_cast<unsigned>(2 * width_ * height_);
    unsigned next = 0;
    std::uint64_t remaining = rank;
    for (int slot = 0; slot < weight_; ++slot) {
        for (unsigned c = next;; ++c) {
            const std::uint64_t tail =
                binomial(total - c - 1, static_cast<unsigned>(weight_ - slot - 1));
            if (remaining < tail) {
                indices_[slot] = c;
                next = c + 1;
                break;
            }
            remaining -= tail;
        }
    }
}

bool TileEnumerator::advance() {
    if (position_ >= count_)
        return false;
    if (fresh_) {
        fresh_ = false;
        return true;
    }
    if (position_ + 1 >= count_) {
        position_ = count_;
        return false;
    }
    // Next combination in lexicographic order.
    const unsigned total = static_cast<unsigned>(2 * width_ * height_);
    int i = weight_ - 1;
    while (i >= 0 && indices_[i] == total - static_cast<unsigned>(weight_ - i))
        --i;
    ++indices_[i];
    for (int j = i + 1; j < weight_; ++j)
        indices_[j] = indices_[j - 1] + 1;
    ++position_;
    return true;
}

Tile TileEnumerator::tile_from_indices() const {
    // Edge index space: H edges first in (y, x) order, then V edges.
    const unsigned per_kind = static_cast<unsigned>(width_ * height_);
    std::vector<EdgeXY> h, v;
    for (unsigned idx : indices_) {
        const bool vert = idx >= per_kind;
        const unsigned rem = vert ? idx - per_kind : idx;
        const int y = static_cast<int>(rem) / width_;
        const int x = static_cast<int>(rem) % width_;
        (vert ? v : h).emplace_back(x, y);
    }
    return Tile(width_, height_, std::move(h), std::move(v));
}

Tile TileEnumerator::current() const { return tile_from_indices(); }

std::optional<Tile> TileEnumerator::next() {
    if (!advance())
        return std::nullopt;
    return tile_from_indices();
}

std::vector<std::uint8_t> parse_polynomial(const std::string& text, char var) {
    std::vector<std::uint8_t> coeffs;
    const auto fail = [&](std::size_t pos, const std::string& what) {
        throw std::invalid_argument("polynomial \"" + text + "\": " + what + " at position " +
                                    std::to_string(pos));
    };
    const auto set_coeff = [&](std::size_t exp, std::size_t pos) {
        if (coeffs.size() <= exp)
            coeffs.resize(exp + 1, 0);
        if (coeffs[exp])
            fail(pos, "duplicate monomial");
        coeffs[exp] = 1;
    };

    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (expect_term)
                fail(i, "expected a term");
            break;
        }
        if (!expect_term) {
            if (text[i] != '+')
                fail(i, "expected '+'");
            ++i;
            expect_term = true;
            continue;
        }
        const std::size_t term_pos = i;
        if (text[i] == '1') {
            ++i;
            set_coeff(0, term_pos);
        } else if (text[i] == var) {
            ++i;
            std::size_t exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(i, "expected an exponent");
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exp = exp * 10 + static_cast<std::size_t>(text[i] - '0');
                    if (exp > 64)
                        fail(term_pos, "exponent too large");
                    ++i;
                }
            }
            set_coeff(exp, term_pos);
        } else {
            fail(term_pos, std::string("expected '1' or '") + var + "'");
        }
        expect_term = false;
    }
    if (coeffs.empty() || std::find(coeffs.begin(), coeffs.end(), 1) == coeffs.end())
        throw std::invalid_argument("polynomial \"" + text + "\": zero polynomial");
    return coeffs;
}

TilePair tiles_from_polynomials(const PolynomialSpec& spec) {
    if (spec.a.empty() || spec.a.back() == 0 || spec.b.empty() || spec.b.back() == 0)
        throw std::invalid_argument("tiles_from_polynomials: zero or unnormalized polynomial");
    if (spec.deg_a() < 1 || spec.deg_b() < 1)
        throw std::invalid_argument("tiles_from_polynomials: degrees must be at least 1");
    const int W = spec.deg_a() + 1;
    const int H = spec.deg_b() + 1;
    std::vector<EdgeXY> h, v;
    for (int i = 0; i < W; ++i)
        if (spec.a[i])
            h.emplace_back(i, H - 1);
    for (int j = 0; j < H; ++j)
        if (spec.b[j])
            v.emplace_back(W - 1, H - 1 - j);
    return TilePair::from_x_tile(Tile(W, H, std::move(h), std::move(v)));
}

} // namespace tilekit
