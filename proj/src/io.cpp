#include "branching/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace branching {

using nlohmann::json;

ParseError::ParseError(std::string where, const std::string& message)
    : std::runtime_error(where + ": " + message), where_(std::move(where)) {}

std::string format_dart(const DartRef& ref) {
    return std::to_string(ref.edge) + "." + std::to_string(ref.segment) + (ref.forward ? "+" : "-");
}

std::optional<DartRef> parse_dart(std::string_view text) {
    if (text.size() < 4) return std::nullopt;
    const char dir = text.back();
    if (dir != '+' && dir != '-') return std::nullopt;
    text.remove_suffix(1);
    const auto dot = text.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    DartRef ref;
    ref.forward = dir == '+';
    const std::string_view edge = text.substr(0, dot), seg = text.substr(dot + 1);
    auto [pe, ee] = std::from_chars(edge.data(), edge.data() + edge.size(), ref.edge);
    if (ee != std::errc{} || pe != edge.data() + edge.size()) return std::nullopt;
    auto [ps, es] = std::from_chars(seg.data(), seg.data() + seg.size(), ref.segment);
    if (es != std::errc{} || ps != seg.data() + seg.size() || ref.segment < 0) return std::nullopt;
    return ref;
}

namespace {

// Top-level keys on their own lines, list entries one per line.
std::string layout(const std::vector<std::pair<std::string, json>>& fields) {
    std::ostringstream out;
    out << "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto& [key, value] = fields[i];
        out << "  " << json(key).dump() << ": ";
        if (value.is_array() && !value.empty()) {
            out << "[\n";
            for (std::size_t j = 0; j < value.size(); ++j)
                out << "    " << value[j].dump() << (j + 1 < value.size() ? ",\n" : "\n");
            out << "  ]";
        } else {
            out << value.dump();
        }
        out << (i + 1 < fields.size() ? ",\n" : "\n");
    }
    out << "}\n";
    return out.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        // Drop the library's "[json.exception.parse_error.101] parse error at ...: " prefix.
        if (const auto p = what.rfind(": "); p != std::string::npos) what = what.substr(p + 2);
        throw ParseError(std::to_string(line) + ":" + std::to_string(col), what);
    }
}

// Typed access with JSON-pointer diagnostics.
struct Cursor {
    const json& value;
    std::string path;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(path.empty() ? "/" : path, message); }

    Cursor at(const std::string& key) const {
        if (!value.is_object()) fail("expected an object");
        const auto it = value.find(key);
        if (it == value.end()) fail("missing \"" + key + "\"");
        return {*it, path + "/" + key};
    }
    std::optional<Cursor> maybe(const std::string& key) const {
        if (!value.is_object()) fail("expected an object");
        const auto it = value.find(key);
        if (it == value.end() || it->is_null()) return std::nullopt;
        return Cursor{*it, path + "/" + key};
    }
    Cursor at(std::size_t i) const { return {value[i], path + "/" + std::to_string(i)}; }
    std::size_t size() const {
        if (!value.is_array()) fail("expected an array");
        return value.size();
    }
    std::int64_t integer() const {
        if (!value.is_number_integer()) fail("expected an integer");
        if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            fail("integer out of range");
        return value.get<std::int64_t>();
    }
    std::string string() const {
        if (!value.is_string()) fail("expected a string");
        return value.get<std::string>();
    }
    bool boolean() const {
        if (!value.is_boolean()) fail("expected true or false");
        return value.get<bool>();
    }
    DartRef dart() const {
        const auto ref = parse_dart(string());
        if (!ref) fail("expected a dart \"<edge>.<segment>+\" or \"-\"");
        return *ref;
    }
};

void expect_header(const Cursor& root, const std::string& format) {
    if (!root.value.is_object()) root.fail("expected an object");
    if (root.at("format").string() != format) root.at("format").fail("expected \"" + format + "\"");
    if (root.at("version").integer() != 1) root.at("version").fail("unsupported version");
}

}  // namespace

std::string write_drawing_spec(const DrawingSpec& spec) {
    json nodes = json::array();
    for (const NodeSpec& n : spec.nodes) {
        json rot = json::array();
        for (const DartRef& r : n.rotation) rot.push_back(format_dart(r));
        nodes.push_back({{"id", n.id}, {"kind", n.kind == NodeKind::Real ? "real" : "crossing"}, {"rotation", rot}});
    }
    json edges = json::array();
    for (const EdgeSpec& e : spec.edges) edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    std::vector<std::pair<std::string, json>> fields{{"format", "branching-drawing"}, {"version", 1},
                                                     {"nodes", nodes}, {"edges", edges}};
    if (spec.outer_face) fields.emplace_back("outer_face", format_dart(*spec.outer_face));
    if (!spec.placements.empty()) {
        json list = json::array();
        for (const PlacementSpec& p : spec.placements) {
            json entry = {{"node", p.node}, {"host", format_dart(p.host)}};
            if (p.outer) entry["outer"] = format_dart(*p.outer);
            list.push_back(entry);
        }
        fields.emplace_back("placements", list);
    }
    if (spec.allow_loops) fields.emplace_back("allow_loops", true);
    return layout(fields);
}

std::string write_drawing(const Drawing& d) { return write_drawing_spec(describe(d)); }

DrawingSpec read_drawing_spec(std::string_view text) {
    const json doc = parse_json(text);
    const Cursor root{doc, ""};
    expect_header(root, "branching-drawing");
    DrawingSpec spec;
    const Cursor nodes = root.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Cursor n = nodes.at(i);
        NodeSpec node;
        node.id = n.at("id").integer();
        const std::string kind = n.at("kind").string();
        if (kind == "real") {
            node.kind = NodeKind::Real;
        } else if (kind == "crossing") {
            node.kind = NodeKind::Crossing;
        } else {
            n.at("kind").fail("expected \"real\" or \"crossing\"");
        }
        if (const auto rot = n.maybe("rotation"))
            for (std::size_t j = 0; j < rot->size(); ++j) node.rotation.push_back(rot->at(j).dart());
        spec.nodes.push_back(std::move(node));
    }
    const Cursor edges = root.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Cursor e = edges.at(i);
        spec.edges.push_back({e.at("id").integer(), e.at("u").integer(), e.at("v").integer()});
    }
    if (const auto outer = root.maybe("outer_face")) spec.outer_face = outer->dart();
    if (const auto list = root.maybe("placements")) {
        for (std::size_t i = 0; i < list->size(); ++i) {
            const Cursor p = list->at(i);
            PlacementSpec place;
            place.node = p.at("node").integer();
            place.host = p.at("host").dart();
            if (const auto o = p.maybe("outer")) place.outer = o->dart();
            spec.placements.push_back(place);
        }
    }
    if (const auto loops = root.maybe("allow_loops")) spec.allow_loops = loops->boolean();
    return spec;
}

Drawing read_drawing(std::string_view text) {
    const DrawingSpec spec = read_drawing_spec(text);
    try {
        return build_drawing(spec);
    } catch (const DrawingError& e) {
        throw ParseError("build", e.what());
    }
}

std::string write_geometric(const GeometricDrawing& g) {
    json vertices = json::array();
    for (const GeoVertex& v : g.vertices) vertices.push_back({v.id, v.at.x, v.at.y});
    json edges = json::array();
    for (const GeoEdge& e : g.edges) {
        json way = json::array();
        for (const GeoPoint& p : e.waypoints) way.push_back({p.x, p.y});
        edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"waypoints", way}});
    }
    return layout({{"format", "geometric"}, {"version", 1}, {"vertices", vertices}, {"edges", edges}});
}

GeometricDrawing read_geometric(std::string_view text) {
    const json doc = parse_json(text);
    const Cursor root{doc, ""};
    expect_header(root, "geometric");
    GeometricDrawing g;
    const Cursor vertices = root.at("vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Cursor v = vertices.at(i);
        if (v.size() != 3) v.fail("expected [id, x, y]");
        g.vertices.push_back({v.at(0).integer(), {v.at(1).integer(), v.at(2).integer()}});
    }
    const Cursor edges = root.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Cursor e = edges.at(i);
        GeoEdge edge{e.at("id").integer(), e.at("u").integer(), e.at("v").integer(), {}};
        if (const auto way = e.maybe("waypoints")) {
            for (std::size_t j = 0; j < way->size(); ++j) {
                const Cursor p = way->at(j);
                if (p.size() != 2) p.fail("expected [x, y]");
                edge.waypoints.push_back({p.at(0).integer(), p.at(1).integer()});
            }
        }
        g.edges.push_back(std::move(edge));
    }
    return g;
}

RunConfig load_run_config(const std::optional<std::string>& path) {
    RunConfig cfg;
    std::optional<std::string> file = path;
    if (!file) {
        if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') file = env;
    }
    if (!file) return cfg;
    std::ifstream in(*file);
    if (!in) throw std::invalid_argument("cannot read config file " + *file);
    std::ostringstream text;
    text << in.rdbuf();
    apply_overrides(cfg.constants, text.str());
    return cfg;
}

}  // namespace branching
