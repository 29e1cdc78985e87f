#include "drawing_internal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <span>
#include <sstream>

namespace branching {

namespace detail {

namespace {

std::string dart_text(const DartRef& r) {
    std::ostringstream os;
    os << r.edge << '.' << r.segment << (r.forward ? '+' : '-');
    return os.str();
}

[[noreturn]] void fail(const std::string& what) { throw DrawingError(what); }

}  // namespace

std::int32_t RegionLabels::find(std::int32_t f) {
    auto i = static_cast<std::size_t>(f);
    while (parent[i] != static_cast<std::int32_t>(i)) {
        parent[i] = parent[static_cast<std::size_t>(parent[i])];
        i = static_cast<std::size_t>(parent[i]);
    }
    return static_cast<std::int32_t>(i);
}

void RegionLabels::unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
}

DrawingData build_core(const DrawingSpec& spec) {
    DrawingData data;
    std::vector<const NodeSpec*> order;
    order.reserve(spec.nodes.size());
    for (const auto& ns : spec.nodes)
        if (ns.kind == NodeKind::Real) order.push_back(&ns);
    const auto vertex_count = static_cast<std::int32_t>(order.size());
    for (const auto& ns : spec.nodes)
        if (ns.kind == NodeKind::Crossing) order.push_back(&ns);
    {
        std::vector<std::int64_t> ids;
        ids.reserve(order.size());
        for (const NodeSpec* ns : order) ids.push_back(ns->id);
        if (!std::is_sorted(ids.begin(), ids.end())) std::sort(ids.begin(), ids.end());
        if (const auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end())
            fail("duplicate node id " + std::to_string(*dup));
    }
    data.vertex_ids.reserve(static_cast<std::size_t>(vertex_count));
    data.vertex_lookup.reserve(static_cast<std::size_t>(vertex_count));
    data.edge_lookup.reserve(spec.edges.size());
    for (std::int32_t i = 0; i < vertex_count; ++i) {
        data.vertex_ids.push_back(order[static_cast<std::size_t>(i)]->id);
        data.vertex_lookup.emplace(order[static_cast<std::size_t>(i)]->id, i);
    }

    data.edges.reserve(spec.edges.size());
    for (const auto& es : spec.edges) {
        auto u = data.vertex_lookup.find(es.u);
        auto v = data.vertex_lookup.find(es.v);
        if (u == data.vertex_lookup.end() || v == data.vertex_lookup.end())
            fail("edge " + std::to_string(es.id) + " has an endpoint that is not a real node");
        if (u->second == v->second && !spec.allow_loops)
            fail("edge " + std::to_string(es.id) + " is a loop");
        if (!data.edge_lookup.emplace(es.id, static_cast<EdgeIndex>(data.edges.size())).second)
            fail("duplicate edge id " + std::to_string(es.id));
        data.edges.push_back(Edge{es.id, u->second, v->second});
    }
    const auto edge_count = data.edges.size();

    // Resolve dart references once; count segments per edge.
    std::vector<std::int32_t> seg_count(edge_count, 0);
    struct Resolved {
        EdgeIndex edge;
        std::int32_t segment;
        bool forward;
    };
    // Rotation of order[i] is resolved[rot_start[i] .. rot_start[i + 1]).
    std::vector<Resolved> resolved;
    std::vector<std::size_t> rot_start(order.size() + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) rot_start[i + 1] = rot_start[i] + order[i]->rotation.size();
    resolved.reserve(rot_start.back());
    auto rotation_of = [&](std::size_t i) {
        return std::span<const Resolved>(resolved.data() + rot_start[i], rot_start[i + 1] - rot_start[i]);
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& r : order[i]->rotation) {
            const auto e = data.edge_lookup.find(r.edge);
            if (e == data.edge_lookup.end())
                fail("node " + std::to_string(order[i]->id) + " references unknown edge " + std::to_string(r.edge));
            if (r.segment < 0) fail("negative segment index in dart " + dart_text(r));
            auto& sc = seg_count[static_cast<std::size_t>(e->second)];
            sc = std::max(sc, r.segment + 1);
            resolved.push_back(Resolved{e->second, r.segment, r.forward});
        }
    }
    data.arc_base.assign(edge_count + 1, 0);
    for (std::size_t e = 0; e < edge_count; ++e) {
        if (seg_count[e] == 0) fail("edge " + std::to_string(data.edges[e].id) + " has no segments");
        data.arc_base[e + 1] = data.arc_base[e] + seg_count[e];
    }
    const ArcIndex arcs = data.arc_base[edge_count];
    std::vector<NodeIndex> dart_node(static_cast<std::size_t>(2 * arcs), kNone);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& r : rotation_of(i)) {
            const DartIndex d = data.dart(r.edge, r.segment, r.forward);
            auto& slot = dart_node[static_cast<std::size_t>(d)];
            if (slot != kNone)
                fail("dart " + dart_text(DartRef{data.edges[static_cast<std::size_t>(r.edge)].id, r.segment, r.forward}) +
                     " listed twice");
            slot = static_cast<NodeIndex>(i);
        }
    }

    for (std::size_t i = static_cast<std::size_t>(vertex_count); i < order.size(); ++i)
        if (rotation_of(i).size() != 4)
            fail("crossing degree: node " + std::to_string(order[i]->id) + " has degree " +
                 std::to_string(rotation_of(i).size()));

    auto& map = data.map;
    map.reserve(order.size(), static_cast<std::size_t>(arcs));
    for (const auto* ns : order) map.add_node(ns->kind);
    for (std::size_t e = 0; e < edge_count; ++e) {
        const Edge& edge = data.edges[e];
        const auto ei = static_cast<EdgeIndex>(e);
        for (std::int32_t s = 0; s < seg_count[e]; ++s) {
            const NodeIndex tail = dart_node[static_cast<std::size_t>(data.dart(ei, s, true))];
            const NodeIndex head = dart_node[static_cast<std::size_t>(data.dart(ei, s, false))];
            if (tail == kNone || head == kNone)
                fail("edge " + std::to_string(edge.id) + " path broken: segment " + std::to_string(s) +
                     " has a missing end");
            map.add_arc(tail, head, ArcLabel{ei, s});
        }
        const std::int32_t last = seg_count[e] - 1;
        if (dart_node[static_cast<std::size_t>(data.dart(ei, 0, true))] != edge.u ||
            dart_node[static_cast<std::size_t>(data.dart(ei, last, false))] != edge.v)
            fail("edge " + std::to_string(edge.id) + " path broken: does not run from u to v");
        for (std::int32_t s = 0; s < last; ++s) {
            const NodeIndex a = dart_node[static_cast<std::size_t>(data.dart(ei, s, false))];
            const NodeIndex b = dart_node[static_cast<std::size_t>(data.dart(ei, s + 1, true))];
            if (a != b) fail("edge " + std::to_string(edge.id) + " path broken after segment " + std::to_string(s));
            if (map.kind(a) != NodeKind::Crossing)
                fail("edge " + std::to_string(edge.id) + " passes through real node " + std::to_string(order[static_cast<std::size_t>(a)]->id));
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& r : rotation_of(i)) map.append_rotation(data.dart(r.edge, r.segment, r.forward));

    for (NodeIndex x = vertex_count; x < map.node_count(); ++x) {
        auto id = [&] { return std::to_string(order[static_cast<std::size_t>(x)]->id); };
        if (map.degree(x) != 4) fail("crossing degree: node " + id() + " has degree " + std::to_string(map.degree(x)));
        const DartIndex r0 = map.first_dart(x), r1 = map.rot_next(r0), r2 = map.rot_next(r1), r3 = map.rot_next(r2);
        const ArcLabel l0 = map.label(PlanarMap::arc_of(r0));
        const ArcLabel l1 = map.label(PlanarMap::arc_of(r1));
        const ArcLabel l2 = map.label(PlanarMap::arc_of(r2));
        const ArcLabel l3 = map.label(PlanarMap::arc_of(r3));
        if (l0.edge == l1.edge && l0.edge == l2.edge)
            fail("edge " + std::to_string(data.edges[static_cast<std::size_t>(l0.edge)].id) + " crosses itself at node " + id());
        if (l0.edge != l2.edge || l1.edge != l3.edge || l0.edge == l1.edge)
            fail("non-alternating rotation at crossing node " + id());
        const Edge& e = data.edges[static_cast<std::size_t>(l0.edge)];
        const Edge& f = data.edges[static_cast<std::size_t>(l1.edge)];
        if ((e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u))
            fail("parallel edges " + std::to_string(e.id) + " and " + std::to_string(f.id) + " cross at node " + id());
    }
    // A crossing node reached twice along the same edge means a self-crossing.
    {
        std::vector<EdgeIndex> seen(static_cast<std::size_t>(map.node_count()), kNone);
        for (std::size_t e = 0; e < edge_count; ++e) {
            for (std::int32_t s = 0; s + 1 < seg_count[e]; ++s) {
                const NodeIndex x = map.node(data.dart(static_cast<EdgeIndex>(e), s, false));
                auto& slot = seen[static_cast<std::size_t>(x)];
                if (slot == static_cast<EdgeIndex>(e))
                    fail("edge " + std::to_string(data.edges[e].id) + " crosses itself");
                slot = static_cast<EdgeIndex>(e);
            }
        }
    }

    map.finalize();
    if (const auto bad = map.euler_violation(); bad != kNone) {
        const NodeIndex witness = map.component_nodes(bad)[0];
        fail("Euler formula violated in component of node " + std::to_string(order[static_cast<std::size_t>(witness)]->id) +
             " (non-planar rotation data)");
    }
    data.degree.assign(static_cast<std::size_t>(vertex_count), 0);
    for (const Edge& e : data.edges) {
        ++data.degree[static_cast<std::size_t>(e.u)];
        ++data.degree[static_cast<std::size_t>(e.v)];
    }
    data.crossings = map.node_count() - vertex_count;
    data.arc_order.resize(static_cast<std::size_t>(arcs));
    std::iota(data.arc_order.begin(), data.arc_order.end(), 0);
    data.nest.assign(static_cast<std::size_t>(map.component_count()), ComponentNest{});
    return data;
}

namespace {

DartIndex smallest_dart(const PlanarMap& map, std::int32_t comp) {
    DartIndex best = kNone;
    for (NodeIndex v : map.component_nodes(comp))
        for (DartIndex d : map.rotation(v))
            if (best == kNone || d < best) best = d;
    return best;
}

DartIndex resolve(const DrawingData& data, const DartRef& r) {
    auto e = data.edge_lookup.find(r.edge);
    if (e == data.edge_lookup.end() || r.segment < 0 || r.segment >= data.segments(e->second))
        throw DrawingError("unknown dart " + dart_text(r));
    return data.dart(e->second, r.segment, r.forward);
}

}  // namespace

void nest_from_placements(DrawingData& data, const DrawingSpec& spec) {
    const PlanarMap& map = data.map;
    const std::int32_t comps = map.component_count();
    data.outer = spec.outer_face ? resolve(data, *spec.outer_face) : kNone;

    std::vector<const PlacementSpec*> placed(static_cast<std::size_t>(comps), nullptr);
    std::unordered_map<std::int64_t, NodeIndex> node_of_id;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(data.vertex_ids.size()); ++v)
        node_of_id.emplace(data.vertex_ids[static_cast<std::size_t>(v)], v);
    std::vector<std::int32_t> placement_comp;
    for (const auto& p : spec.placements) {
        auto it = node_of_id.find(p.node);
        if (it == node_of_id.end()) fail("placement names unknown vertex " + std::to_string(p.node));
        const std::int32_t c = map.component(it->second);
        if (placed[static_cast<std::size_t>(c)] != nullptr)
            fail("component of vertex " + std::to_string(p.node) + " placed twice");
        placed[static_cast<std::size_t>(c)] = &p;
    }

    std::int32_t root = kNone;
    if (data.outer != kNone) {
        root = map.component(map.node(data.outer));
        if (placed[static_cast<std::size_t>(root)] != nullptr) fail("the outer-face component cannot be placed");
    } else {
        for (std::int32_t c = 0; c < comps; ++c)
            if (map.component_arc_count(c) > 0 && placed[static_cast<std::size_t>(c)] == nullptr) {
                root = c;
                break;
            }
    }
    if (root == kNone) {
        if (!spec.placements.empty()) fail("placements given but no component has a face to host them");
        return;
    }
    const DartIndex root_outer = data.outer != kNone ? data.outer : smallest_dart(map, root);
    data.nest[static_cast<std::size_t>(root)] = ComponentNest{kNone, kNone, root_outer};
    for (std::int32_t c = 0; c < comps; ++c) {
        if (c == root) continue;
        auto& nest = data.nest[static_cast<std::size_t>(c)];
        const bool has_darts = map.component_arc_count(c) > 0;
        if (const auto* p = placed[static_cast<std::size_t>(c)]) {
            nest.host = resolve(data, p->host);
            nest.parent = map.component(map.node(nest.host));
            if (nest.parent == c) fail("component of vertex " + std::to_string(p->node) + " placed inside itself");
            if (p->outer) {
                if (!has_darts) fail("isolated vertex " + std::to_string(p->node) + " cannot name an outer dart");
                nest.outer = resolve(data, *p->outer);
                if (map.component(map.node(nest.outer)) != c)
                    fail("outer dart of placement for vertex " + std::to_string(p->node) + " lies in another component");
            } else {
                nest.outer = has_darts ? smallest_dart(map, c) : kNone;
            }
        } else {
            nest.parent = root;
            nest.host = root_outer;
            nest.outer = has_darts ? smallest_dart(map, c) : kNone;
        }
    }
    for (std::int32_t c = 0; c < comps; ++c) {
        std::int32_t walk = c;
        for (std::int32_t steps = 0; walk != root; ++steps) {
            if (steps > comps) fail("placements form a cycle");
            walk = data.nest[static_cast<std::size_t>(walk)].parent;
            if (walk == kNone) fail("placement chain does not reach the root component");
            if (map.component_arc_count(walk) == 0) fail("a component is placed inside an isolated vertex");
        }
    }
}

void nest_from_regions(DrawingData& data, const std::vector<std::int32_t>& face_region,
                       const std::vector<std::int32_t>& node_region) {
    const PlanarMap& map = data.map;
    const std::int32_t comps = map.component_count();
    std::int32_t root = kNone;
    if (data.outer != kNone) root = map.component(map.node(data.outer));
    for (std::int32_t c = 0; c < comps && root == kNone; ++c)
        if (map.component_arc_count(c) > 0) root = c;
    data.nest.assign(static_cast<std::size_t>(comps), ComponentNest{});
    if (root == kNone) return;

    // Region -> (component, representative dart or kNone for isolated nodes).
    std::unordered_map<std::int32_t, std::vector<std::pair<std::int32_t, DartIndex>>> members;
    for (std::int32_t c = 0; c < comps; ++c) {
        if (map.component_arc_count(c) > 0) {
            for (FaceIndex f : map.component_faces(c))
                members[face_region[static_cast<std::size_t>(f)]].emplace_back(c, map.face_dart(f));
        } else {
            const NodeIndex v = map.component_nodes(c)[0];
            members[node_region[static_cast<std::size_t>(v)]].emplace_back(c, kNone);
        }
    }
    const DartIndex root_outer = data.outer != kNone ? data.outer : smallest_dart(map, root);
    data.nest[static_cast<std::size_t>(root)] = ComponentNest{kNone, kNone, root_outer};
    std::vector<char> visited(static_cast<std::size_t>(comps), 0);
    visited[static_cast<std::size_t>(root)] = 1;
    std::deque<std::int32_t> queue{root};
    while (!queue.empty()) {
        const std::int32_t k = queue.front();
        queue.pop_front();
        for (FaceIndex f : map.component_faces(k)) {
            auto it = members.find(face_region[static_cast<std::size_t>(f)]);
            if (it == members.end()) continue;
            for (const auto& [x, dart] : it->second) {
                if (visited[static_cast<std::size_t>(x)]) continue;
                visited[static_cast<std::size_t>(x)] = 1;
                data.nest[static_cast<std::size_t>(x)] = ComponentNest{k, map.face_dart(f), dart};
                if (dart != kNone) queue.push_back(x);
            }
        }
    }
    for (std::int32_t c = 0; c < comps; ++c) {
        if (visited[static_cast<std::size_t>(c)]) continue;
        const DartIndex own = map.component_arc_count(c) > 0 ? smallest_dart(map, c) : kNone;
        data.nest[static_cast<std::size_t>(c)] = ComponentNest{root, root_outer, own};
    }
}

RegionLabels initial_regions(const DrawingData& data) {
    const PlanarMap& map = data.map;
    RegionLabels labels;
    labels.parent.resize(static_cast<std::size_t>(map.face_count()));
    std::iota(labels.parent.begin(), labels.parent.end(), 0);
    for (std::int32_t c = 0; c < map.component_count(); ++c) {
        const auto& nest = data.nest[static_cast<std::size_t>(c)];
        if (nest.parent != kNone && nest.outer != kNone)
            labels.unite(map.face(nest.outer), map.face(nest.host));
    }
    return labels;
}

std::int32_t isolated_region(const DrawingData& data, NodeIndex v) {
    const auto& nest = data.nest[static_cast<std::size_t>(data.map.component(v))];
    return nest.host == kNone ? kNone : data.map.face(nest.host);
}

}  // namespace detail

using detail::DrawingAccess;
using detail::DrawingData;

Drawing::Drawing() : Drawing(build_drawing(DrawingSpec{})) {}
Drawing::Drawing(std::shared_ptr<const DrawingData> data) : data_(std::move(data)) {}

std::int32_t Drawing::vertex_count() const { return static_cast<std::int32_t>(data_->vertex_ids.size()); }
std::int32_t Drawing::edge_count() const { return static_cast<std::int32_t>(data_->edges.size()); }
std::int32_t Drawing::crossing_count() const { return data_->crossings; }
VertexId Drawing::vertex_id(VertexIndex v) const { return data_->vertex_ids[static_cast<std::size_t>(v)]; }
std::optional<VertexIndex> Drawing::find_vertex(VertexId id) const {
    auto it = data_->vertex_lookup.find(id);
    if (it == data_->vertex_lookup.end()) return std::nullopt;
    return it->second;
}
const Edge& Drawing::edge(EdgeIndex e) const { return data_->edges[static_cast<std::size_t>(e)]; }
std::span<const Edge> Drawing::edges() const { return data_->edges; }
std::optional<EdgeIndex> Drawing::find_edge(EdgeId id) const {
    auto it = data_->edge_lookup.find(id);
    if (it == data_->edge_lookup.end()) return std::nullopt;
    return it->second;
}
std::int32_t Drawing::degree(VertexIndex v) const { return data_->degree[static_cast<std::size_t>(v)]; }

std::int32_t Drawing::max_multiplicity() const {
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    pairs.reserve(data_->edges.size());
    for (const Edge& e : data_->edges) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    std::int32_t best = 0;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        best = std::max(best, static_cast<std::int32_t>(j - i));
        i = j;
    }
    return best;
}

bool Drawing::has_loops() const {
    return std::any_of(data_->edges.begin(), data_->edges.end(), [](const Edge& e) { return e.is_loop(); });
}

const PlanarMap& Drawing::map() const { return data_->map; }

std::span<const ArcIndex> Drawing::edge_arcs(EdgeIndex e) const {
    const auto b = static_cast<std::size_t>(data_->arc_base[static_cast<std::size_t>(e)]);
    return std::span<const ArcIndex>(data_->arc_order).subspan(b, static_cast<std::size_t>(data_->segments(e)));
}

std::pair<EdgeIndex, EdgeIndex> Drawing::crossing_edges(NodeIndex crossing) const {
    const DartIndex d = data_->map.first_dart(crossing);
    return {data_->map.label(PlanarMap::arc_of(d)).edge,
            data_->map.label(PlanarMap::arc_of(data_->map.rot_next(d))).edge};
}

std::int32_t Drawing::crossings_on(EdgeIndex e) const { return data_->segments(e) - 1; }

std::optional<DartIndex> Drawing::outer_dart() const {
    if (data_->outer == kNone) return std::nullopt;
    return data_->outer;
}
std::int32_t Drawing::component_parent(std::int32_t comp) const { return data_->nest[static_cast<std::size_t>(comp)].parent; }
DartIndex Drawing::component_host(std::int32_t comp) const { return data_->nest[static_cast<std::size_t>(comp)].host; }
DartIndex Drawing::component_outer(std::int32_t comp) const { return data_->nest[static_cast<std::size_t>(comp)].outer; }

FaceIndex Drawing::face_containing(std::int32_t comp, std::int32_t other) const {
    const auto& nest = data_->nest;
    std::int32_t walk = other;
    while (walk != kNone) {
        const std::int32_t parent = nest[static_cast<std::size_t>(walk)].parent;
        if (parent == comp) return data_->map.face(nest[static_cast<std::size_t>(walk)].host);
        walk = parent;
    }
    const DartIndex outer = nest[static_cast<std::size_t>(comp)].outer;
    return outer == kNone ? kNone : data_->map.face(outer);
}

DartRef Drawing::dart_ref(DartIndex d) const {
    const ArcLabel& l = data_->map.label(PlanarMap::arc_of(d));
    return DartRef{data_->edges[static_cast<std::size_t>(l.edge)].id, l.segment, (d & 1) == 0};
}

DartIndex Drawing::dart_index(const DartRef& ref) const {
    auto e = find_edge(ref.edge);
    if (!e || ref.segment < 0 || ref.segment >= data_->segments(*e))
        throw DrawingError("unknown dart reference");
    return data_->dart(*e, ref.segment, ref.forward);
}

Drawing build_drawing(const DrawingSpec& spec) {
    DrawingData data = detail::build_core(spec);
    detail::nest_from_placements(data, spec);
    return DrawingAccess::wrap(std::move(data));
}

DrawingSpec describe(const Drawing& d) {
    const PlanarMap& map = d.map();
    DrawingSpec spec;
    VertexId next_id = 0;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) next_id = std::max(next_id, d.vertex_id(v) + 1);
    spec.nodes.reserve(static_cast<std::size_t>(map.node_count()));
    for (NodeIndex x = 0; x < map.node_count(); ++x) {
        NodeSpec ns;
        ns.kind = map.kind(x);
        ns.id = x < d.vertex_count() ? d.vertex_id(x) : next_id + (x - d.vertex_count());
        for (DartIndex dart : map.rotation(x)) ns.rotation.push_back(d.dart_ref(dart));
        spec.nodes.push_back(std::move(ns));
    }
    for (const Edge& e : d.edges()) spec.edges.push_back(EdgeSpec{e.id, d.vertex_id(e.u), d.vertex_id(e.v)});
    spec.allow_loops = d.has_loops();
    if (auto outer = d.outer_dart()) spec.outer_face = d.dart_ref(*outer);
    for (std::int32_t c = 0; c < map.component_count(); ++c) {
        if (d.component_parent(c) == kNone) continue;
        PlacementSpec p;
        p.node = d.vertex_id(map.component_nodes(c)[0]);
        p.host = d.dart_ref(d.component_host(c));
        if (d.component_outer(c) != kNone) p.outer = d.dart_ref(d.component_outer(c));
        spec.placements.push_back(p);
    }
    return spec;
}

std::vector<std::vector<DartIndex>> faces(const Drawing& d) {
    const PlanarMap& map = d.map();
    std::vector<std::vector<DartIndex>> out(static_cast<std::size_t>(map.face_count()));
    for (FaceIndex f = 0; f < map.face_count(); ++f) {
        const DartIndex start = map.face_dart(f);
        DartIndex x = start;
        do {
            out[static_cast<std::size_t>(f)].push_back(x);
            x = map.face_next(x);
        } while (x != start);
    }
    return out;
}

std::int64_t degree_square_sum(const Drawing& d) {
    std::int64_t s = 0;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) s += static_cast<std::int64_t>(d.degree(v)) * d.degree(v);
    return s;
}

}  // namespace branching
