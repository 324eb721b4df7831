#include "tilekit/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilekit {

namespace {

bool by_yx(const Anchor& a, const Anchor& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
}

bool anchor_order(const std::pair<Anchor, AnchorRole>& a, const std::pair<Anchor, AnchorRole>& b) {
    return by_yx(a.first, b.first);
}

} // namespace

std::vector<Anchor> Layout::anchors_with_role(AnchorRole role) const {
    std::vector<Anchor> out;
    for (const auto& [a, r] : anchors)
        if (r == role)
            out.push_back(a);
    return out;
}

std::vector<Anchor> Layout::x_anchors() const {
    std::vector<Anchor> out;
    for (const auto& [a, r] : anchors)
        if (r != AnchorRole::ZOnly)
            out.push_back(a);
    return out;
}

std::vector<Anchor> Layout::z_anchors() const {
    std::vector<Anchor> out;
    for (const auto& [a, r] : anchors)
        if (r != AnchorRole::XOnly)
            out.push_back(a);
    return out;
}

std::size_t Layout::count(AnchorRole role) const {
    std::size_t n = 0;
    for (const auto& [a, r] : anchors)
        n += (r == role);
    return n;
}

bool Layout::has_qubit(const EdgeCoord& e) const {
    return std::binary_search(qubit_edges.begin(), qubit_edges.end(), e);
}

std::vector<EdgeCoord> derive_qubits(const std::vector<Anchor>& bulk_anchors, int box_w,
                                     int box_h) {
    if (bulk_anchors.empty())
        throw std::invalid_argument("derive_qubits: empty bulk anchor set");
    std::vector<EdgeCoord> edges;
    edges.reserve(bulk_anchors.size() * 2 * box_w * box_h);
    for (const auto& [ax, ay] : bulk_anchors)
        for (int i = 0; i < box_w; ++i)
            for (int j = 0; j < box_h; ++j) {
                edges.push_back({Orientation::H, ax + i, ay + j});
                edges.push_back({Orientation::V, ax + i, ay + j});
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Layout unrotated_layout(int L, int M, int box_w, int box_h, BoundaryLayers layers) {
    if (L < 1 || M < 1)
        throw std::invalid_argument("unrotated_layout: bulk block must be at least 1x1");
    if (box_w < 1 || box_h < 1)
        throw std::invalid_argument("unrotated_layout: box must be at least 1x1");
    const int xb = layers.x_bottom < 0 ? box_h - 1 : layers.x_bottom;
    const int xt = layers.x_top < 0 ? box_h - 1 : layers.x_top;
    const int zl = layers.z_left < 0 ? box_w - 1 : layers.z_left;
    const int zr = layers.z_right < 0 ? box_w - 1 : layers.z_right;

    Layout lay;
    lay.box_w = box_w;
    lay.box_h = box_h;
    lay.kind = LayoutKind::Unrotated;
    lay.L = L;
    lay.M = M;
    lay.layers = {xb, xt, zl, zr};

    std::vector<Anchor> bulk;
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < M; ++y) {
            bulk.emplace_back(x, y);
            lay.anchors.push_back({{x, y}, AnchorRole::Both});
        }
    for (int x = 0; x < L; ++x) {
        for (int y = -xb; y < 0; ++y)
            lay.anchors.push_back({{x, y}, AnchorRole::XOnly});
        for (int y = M; y < M + xt; ++y)
            lay.anchors.push_back({{x, y}, AnchorRole::XOnly});
    }
    for (int y = 0; y < M; ++y) {
        for (int x = -zl; x < 0; ++x)
            lay.anchors.push_back({{x, y}, AnchorRole::ZOnly});
        for (int x = L; x < L + zr; ++x)
            lay.anchors.push_back({{x, y}, AnchorRole::ZOnly});
    }
    std::sort(lay.anchors.begin(), lay.anchors.end(), anchor_order);
    lay.qubit_edges = derive_qubits(bulk, box_w, box_h);
    return lay;
}

Layout rotated_layout(int r, int box_size) {
    if (r < 1)
        throw std::invalid_argument("rotated_layout: radius must be positive");
    if (box_size < 1)
        throw std::invalid_argument("rotated_layout: box must be at least 1x1");
    const int B = box_size;

    Layout lay;
    lay.box_w = B;
    lay.box_h = B;
    lay.kind = LayoutKind::Rotated;
    lay.r = r;

    std::vector<Anchor> bulk;
    for (int x = -r; x <= r; ++x)
        for (int y = -r; y <= r; ++y)
            if (std::abs(x) + std::abs(y) <= r) {
                bulk.emplace_back(x, y);
                lay.anchors.push_back({{x, y}, AnchorRole::Both});
            }

    // Staircase boundaries: X above the upper-right bulk edge plus the point
    // reflection, Z mirrored on the upper-left. Generalized from the B-1
    // brace of the construction figure; re-checked by validate_layout below.
    std::vector<Anchor> xs, zs;
    for (int x = 0; x <= r; ++x)
        for (int y = r - x + 1; y <= r + B - 1; ++y)
            xs.emplace_back(x, y);
    for (int y = 0; y <= r; ++y)
        for (int x = -(r + B - 1); x <= y - r - 1; ++x)
            zs.emplace_back(x, y);
    for (const auto& [x, y] : std::vector<Anchor>(xs))
        xs.emplace_back(-x, -y);
    for (const auto& [x, y] : std::vector<Anchor>(zs))
        zs.emplace_back(-x, -y);
    for (const auto& a : xs)
        lay.anchors.push_back({a, AnchorRole::XOnly});
    for (const auto& a : zs)
        lay.anchors.push_back({a, AnchorRole::ZOnly});

    std::sort(lay.anchors.begin(), lay.anchors.end(), anchor_order);
    lay.qubit_edges = derive_qubits(bulk, B, B);

    if (auto res = validate_layout(lay); !res)
        throw std::logic_error("rotated_layout: staircase violates the overlap rule: " +
                               res.message);
    return lay;
}

Layout custom_layout(int box_w, int box_h, const std::map<Anchor, AnchorRole>& anchors) {
    if (box_w < 1 || box_h < 1)
        throw std::invalid_argument("custom_layout: box must be at least 1x1");
    Layout lay;
    lay.box_w = box_w;
    lay.box_h = box_h;
    lay.kind = LayoutKind::Custom;
    std::vector<Anchor> bulk;
    for (const auto& [a, role] : anchors) {
        lay.anchors.push_back({a, role});
        if (role == AnchorRole::Both)
            bulk.push_back(a);
    }
    std::sort(lay.anchors.begin(), lay.anchors.end(), anchor_order);
    lay.qubit_edges = derive_qubits(bulk, box_w, box_h);
    return lay;
}

ValidationResult validate_layout(const Layout& layout) {
    const int W = layout.box_w, H = layout.box_h;
    const auto xs = layout.x_anchors();
    const auto zs = layout.z_anchors();
    const auto is_both = [&](const Anchor& a) {
        auto it = std::lower_bound(layout.anchors.begin(), layout.anchors.end(),
                                   std::pair{a, AnchorRole::Both}, anchor_order);
        return it != layout.anchors.end() && it->first == a && it->second == AnchorRole::Both;
    };

    for (const auto& p : xs) {
        const bool p_bulk = is_both(p);
        for (const auto& q : zs) {
            if (p_bulk && is_both(q))
                continue; // bulk boxes lie inside the qubit set by construction
            const int lox = std::max(p.first, q.first);
            const int hix = std::min(p.first, q.first) + W - 1;
            const int loy = std::max(p.second, q.second);
            const int hiy = std::min(p.second, q.second) + H - 1;
            if (lox > hix || loy > hiy)
                continue;
            for (int x = lox; x <= hix; ++x)
                for (int y = loy; y <= hiy; ++y)
                    for (Orientation o : {Orientation::H, Orientation::V})
                        if (!layout.has_qubit({o, x, y}))
                            return ValidationResult::reject(
                                "X anchor (" + std::to_string(p.first) + "," +
                                std::to_string(p.second) + ") and Z anchor (" +
                                std::to_string(q.first) + "," + std::to_string(q.second) +
                                ") share edge " + to_string({o, x, y}) +
                                " outside the qubit set");
        }
    }
    return ValidationResult::accept();
}

} // namespace tilekit
