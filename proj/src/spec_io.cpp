#include "tilekit/spec_io.hpp"

#include <json.hpp>

#include <map>

namespace tilekit {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw SpecError(path + ": " + what);
}

const json& expect(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(path + "." + key, "missing");
    return *it;
}

int expect_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

std::uint64_t expect_u64(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::vector<EdgeXY> edges_from_json(const json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of [x,y] pairs");
    std::vector<EdgeXY> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        const std::string epath = path + "[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2)
            fail(epath, "expected [x,y]");
        out.emplace_back(expect_int(e[0], epath + "[0]"), expect_int(e[1], epath + "[1]"));
    }
    return out;
}

Tile tile_from_json(const json& j, int box_w, int box_h, const std::string& path) {
    if (!j.is_object())
        fail(path, "expected a tile object");
    int w = box_w, h = box_h;
    if (j.contains("w"))
        w = expect_int(j["w"], path + ".w");
    if (j.contains("h"))
        h = expect_int(j["h"], path + ".h");
    if (box_w > 0 && (w != box_w || h != box_h))
        fail(path, "tile box " + std::to_string(w) + "x" + std::to_string(h) +
                       " does not match the spec box " + std::to_string(box_w) + "x" +
                       std::to_string(box_h));
    try {
        return Tile(w, h, edges_from_json(expect(j, "h_edges", path), path + ".h_edges"),
                    edges_from_json(expect(j, "v_edges", path), path + ".v_edges"));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

json tile_to_json(const Tile& t) {
    json j;
    j["w"] = t.width();
    j["h"] = t.height();
    json he = json::array(), ve = json::array();
    for (const auto& [x, y] : t.h_edges())
        he.push_back({x, y});
    for (const auto& [x, y] : t.v_edges())
        ve.push_back({x, y});
    j["h_edges"] = std::move(he);
    j["v_edges"] = std::move(ve);
    return j;
}

// x_layers / z_layers: a single count for both sides, or [bottom, top]
// (resp. [left, right]).
std::pair<int, int> layers_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        return {v, v};
    }
    if (j.is_array() && j.size() == 2)
        return {expect_int(j[0], path + "[0]"), expect_int(j[1], path + "[1]")};
    fail(path, "expected a layer count or [near, far] pair");
}

Layout layout_from_json(const json& j, int box_w, int box_h, const std::string& path) {
    const std::string kind = [&] {
        const json& k = expect(j, "kind", path);
        if (!k.is_string())
            fail(path + ".kind", "expected a string");
        return k.get<std::string>();
    }();
    try {
        if (kind == "unrotated") {
            BoundaryLayers layers;
            if (j.contains("x_layers"))
                std::tie(layers.x_bottom, layers.x_top) =
                    layers_from_json(j["x_layers"], path + ".x_layers");
            if (j.contains("z_layers"))
                std::tie(layers.z_left, layers.z_right) =
                    layers_from_json(j["z_layers"], path + ".z_layers");
            return unrotated_layout(expect_int(expect(j, "L", path), path + ".L"),
                                    expect_int(expect(j, "M", path), path + ".M"), box_w, box_h,
                                    layers);
        }
        if (kind == "rotated") {
            if (box_w != box_h)
                fail(path, "rotated layouts need a square box");
            return rotated_layout(expect_int(expect(j, "r", path), path + ".r"), box_w);
        }
        if (kind == "custom") {
            const json& anchors = expect(j, "anchors", path);
            if (!anchors.is_array())
                fail(path + ".anchors", "expected an array");
            std::map<Anchor, AnchorRole> map;
            for (std::size_t i = 0; i < anchors.size(); ++i) {
                const std::string apath = path + ".anchors[" + std::to_string(i) + "]";
                const json& a = anchors[i];
                if (!a.is_array() || a.size() != 3 || !a[2].is_string())
                    fail(apath, "expected [x, y, \"both\"|\"x\"|\"z\"]");
                const std::string role = a[2].get<std::string>();
                AnchorRole r;
                if (role == "both")
                    r = AnchorRole::Both;
                else if (role == "x")
                    r = AnchorRole::XOnly;
                else if (role == "z")
                    r = AnchorRole::ZOnly;
                else
                    fail(apath + "[2]", "unknown role \"" + role + "\"");
                map[{expect_int(a[0], apath + "[0]"), expect_int(a[1], apath + "[1]")}] = r;
            }
            return custom_layout(box_w, box_h, map);
        }
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    } catch (const std::logic_error& e) {
        fail(path, e.what());
    }
    fail(path + ".kind", "unknown layout kind \"" + kind + "\"");
}

json layout_to_json(const Layout& lay) {
    json j;
    switch (lay.kind) {
    case LayoutKind::Unrotated:
        j["kind"] = "unrotated";
        j["L"] = lay.L;
        j["M"] = lay.M;
        j["x_layers"] = {lay.layers.x_bottom, lay.layers.x_top};
        j["z_layers"] = {lay.layers.z_left, lay.layers.z_right};
        break;
    case LayoutKind::Rotated:
        j["kind"] = "rotated";
        j["r"] = lay.r;
        break;
    case LayoutKind::Custom: {
        j["kind"] = "custom";
        json anchors = json::array();
        for (const auto& [a, role] : lay.anchors) {
            const char* name = role == AnchorRole::Both ? "both"
                               : role == AnchorRole::XOnly ? "x"
                                                           : "z";
            anchors.push_back({a.first, a.second, name});
        }
        j["anchors"] = std::move(anchors);
        break;
    }
    }
    return j;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("$: invalid JSON: ") + e.what());
    }
}

std::pair<int, int> box_from_json(const json& doc) {
    const json& box = expect(doc, "box", "$");
    return {expect_int(expect(box, "w", "$.box"), "$.box.w"),
            expect_int(expect(box, "h", "$.box"), "$.box.h")};
}

} // namespace

ParsedSpec parse_spec(const std::string& text) {
    const json doc = parse_text(text);
    const auto [bw, bh] = box_from_json(doc);

    ParsedSpec out;
    Tile x_tile = tile_from_json(expect(doc, "x_tile", "$"), bw, bh, "$.x_tile");
    if (doc.contains("z_tile")) {
        Tile z_tile = tile_from_json(doc["z_tile"], bw, bh, "$.z_tile");
        TilePair pair{std::move(x_tile), std::move(z_tile)};
        if (auto res = validate_tile_pair(pair); !res)
            fail("$.z_tile", res.message);
        out.pair = std::move(pair);
    } else {
        out.pair = TilePair::from_x_tile(std::move(x_tile));
    }

    out.layout = layout_from_json(expect(doc, "layout", "$"), bw, bh, "$.layout");
    if (auto res = validate_layout(out.layout); !res)
        fail("$.layout", res.message);

    if (doc.contains("distance")) {
        const json& d = doc["distance"];
        if (!d.is_object())
            fail("$.distance", "expected an object");
        if (d.contains("trials"))
            out.distance.trials = expect_u64(d["trials"], "$.distance.trials");
        if (d.contains("seed"))
            out.distance.seed = expect_u64(d["seed"], "$.distance.seed");
        if (d.contains("budget"))
            out.distance.budget = expect_u64(d["budget"], "$.distance.budget");
    }
    return out;
}

std::string serialize_spec(const ParsedSpec& spec) {
    json doc;
    doc["format_version"] = 1;
    doc["box"] = {{"w", spec.pair.width()}, {"h", spec.pair.height()}};
    doc["x_tile"] = tile_to_json(spec.pair.x_tile);
    doc["z_tile"] = tile_to_json(spec.pair.z_tile);
    doc["layout"] = layout_to_json(spec.layout);
    doc["distance"] = {{"trials", spec.distance.trials},
                       {"seed", spec.distance.seed},
                       {"budget", spec.distance.budget}};
    return doc.dump(2) + "\n";
}

TableDocument parse_table_document(const std::string& text) {
    const json doc = parse_text(text);
    const auto [bw, bh] = box_from_json(doc);

    TableDocument out;
    out.layout = layout_from_json(expect(doc, "layout", "$"), bw, bh, "$.layout");
    if (doc.contains("trials"))
        out.trials = expect_u64(doc["trials"], "$.trials");
    if (doc.contains("seed"))
        out.seed = expect_u64(doc["seed"], "$.seed");

    const json& entries = expect(doc, "entries", "$");
    if (!entries.is_array() || entries.empty())
        fail("$.entries", "expected a non-empty array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string path = "$.entries[" + std::to_string(i) + "]";
        const json& e = entries[i];
        TableEntry te;
        te.x_tile = tile_from_json(expect(e, "x_tile", path), bw, bh, path + ".x_tile");
        te.n = expect_int(expect(e, "n", path), path + ".n");
        te.k = expect_int(expect(e, "k", path), path + ".k");
        te.d = expect_int(expect(e, "d", path), path + ".d");
        out.entries.push_back(std::move(te));
    }
    return out;
}

std::string report_to_jsonl(const SearchReport& report) {
    std::string out;
    for (const auto& e : report.entries) {
        json line;
        line["x_tile"] = tile_to_json(e.x_tile);
        line["n"] = e.n;
        line["k"] = e.k;
        line["d_hat"] = e.d_hat;
        line["efficiency"] = {{"num", e.eff_num}, {"den", e.eff_den}};
        line["trimmed"] = e.trimmed;
        out += line.dump() + "\n";
    }
    json summary;
    summary["format_version"] = 1;
    summary["box"] = {{"w", report.config.box_w}, {"h", report.config.box_h}};
    summary["weight"] = report.config.weight;
    summary["mode"] = report.config.mode == SearchMode::Exhaustive ? "exhaustive" : "random";
    summary["seed"] = report.config.seed;
    summary["coarse_trials"] = report.config.coarse_trials;
    summary["fine_trials"] = report.config.fine_trials;
    summary["top_count"] = report.config.top_count;
    summary["candidates_examined"] = report.candidates_examined;
    summary["passed_k"] = report.passed_k;
    summary["entries"] = report.entries.size();
    json wrapper;
    wrapper["summary"] = std::move(summary);
    out += wrapper.dump() + "\n";
    return out;
}

} // namespace tilekit
