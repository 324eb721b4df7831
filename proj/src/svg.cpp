#include "tilekit/svg.hpp"

#include <algorithm>
#include <sstream>

namespace tilekit {

namespace {

// Single place for the drawing constants; colors follow the usual red-X /
// blue-Z reading of lattice figures.
struct Style {
    int scale = 24;
    int pad = 36;
    const char* edge_color = "#b8b8b8";
    const char* x_color = "#d62728";
    const char* z_color = "#1f77b4";
    const char* both_color = "#000000";
    const char* box_opacity = "0.12";
    double edge_width = 2.0;
    double tile_width = 4.0;
    double dot_radius = 4.5;
};

constexpr const char* role_color(const Style& st, AnchorRole role) {
    return role == AnchorRole::Both ? st.both_color
           : role == AnchorRole::XOnly ? st.x_color
                                       : st.z_color;
}

} // namespace

std::string render_svg(const Layout& layout, const TilePair* pair,
                       const std::optional<TileHighlight>& highlight) {
    const Style st;

    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    const auto grow = [&](int x, int y) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const auto& e : layout.qubit_edges) {
        grow(e.x, e.y);
        grow(e.x + (e.o == Orientation::H ? 1 : 0), e.y + (e.o == Orientation::V ? 1 : 0));
    }
    for (const auto& [a, role] : layout.anchors)
        grow(a.first, a.second);

    const auto px = [&](int x) { return st.pad + (x - min_x) * st.scale; };
    const auto py = [&](int y) { return st.pad + (max_y - y) * st.scale; };
    const int width = px(max_x) + st.pad;
    const int height = py(min_y) + st.pad;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    const auto line = [&](const EdgeCoord& e, const char* color, double width_px, bool dotted) {
        const int x2 = e.x + (e.o == Orientation::H ? 1 : 0);
        const int y2 = e.y + (e.o == Orientation::V ? 1 : 0);
        out << "  <line x1=\"" << px(e.x) << "\" y1=\"" << py(e.y) << "\" x2=\"" << px(x2)
            << "\" y2=\"" << py(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << width_px
            << "\"";
        if (dotted)
            out << " stroke-dasharray=\"3 4\"";
        out << " />\n";
    };

    for (const auto& e : layout.qubit_edges)
        line(e, st.edge_color, st.edge_width, false);

    if (pair && highlight) {
        const auto [ax, ay] = highlight->anchor;
        const Tile& tile = highlight->type == 'Z' ? pair->z_tile : pair->x_tile;
        const char* color = highlight->type == 'Z' ? st.z_color : st.x_color;
        out << "  <rect x=\"" << px(ax) << "\" y=\"" << py(ay + layout.box_h) << "\" width=\""
            << layout.box_w * st.scale << "\" height=\"" << layout.box_h * st.scale
            << "\" fill=\"" << color << "\" fill-opacity=\"" << st.box_opacity << "\" />\n";
        for (const auto& e : tile.edges_at(ax, ay))
            line(e, color, st.tile_width, !layout.has_qubit(e));
    }

    for (const auto& [a, role] : layout.anchors)
        out << "  <circle cx=\"" << px(a.first) << "\" cy=\"" << py(a.second) << "\" r=\""
            << st.dot_radius << "\" fill=\"" << role_color(st, role) << "\" />\n";

    out << "</svg>\n";
    return out.str();
}

} // namespace tilekit
