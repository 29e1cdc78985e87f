#include "drawing_internal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace branching {

using detail::DrawingAccess;
using detail::DrawingData;

namespace {

/// Old dart whose left face contains the left side of a new dart.
using DartOrigin = std::function<DartIndex(EdgeId edge, std::int32_t segment, bool forward)>;

/// Rebuilds core data for `spec`, then derives nesting from the old drawing's
/// regions, joined across `merged_arcs` (arcs that disappeared).
Drawing finish_edit(const DrawingData& old, const DrawingSpec& spec, const std::vector<ArcIndex>& merged_arcs,
                    const DartOrigin& origin) {
    DrawingData data = detail::build_core(spec);
    auto regions = detail::initial_regions(old);
    for (ArcIndex a : merged_arcs) regions.unite(old.map.face(2 * a), old.map.face(2 * a + 1));

    const PlanarMap& map = data.map;
    auto old_dart_of = [&](DartIndex d) {
        const ArcLabel& l = map.label(PlanarMap::arc_of(d));
        return origin(data.edges[static_cast<std::size_t>(l.edge)].id, l.segment, (d & 1) == 0);
    };
    // A new face may merge several old faces (vertex splits); join their regions.
    for (DartIndex d = 0; d < map.dart_count(); ++d)
        regions.unite(old.map.face(old_dart_of(d)), old.map.face(old_dart_of(map.face_dart(map.face(d)))));
    std::vector<std::int32_t> face_region(static_cast<std::size_t>(map.face_count()));
    for (FaceIndex f = 0; f < map.face_count(); ++f)
        face_region[static_cast<std::size_t>(f)] = regions.find(old.map.face(old_dart_of(map.face_dart(f))));
    std::vector<std::int32_t> node_region(static_cast<std::size_t>(map.node_count()), kNone);
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(data.vertex_ids.size()); ++v) {
        if (map.degree(v) != 0) continue;
        auto old_v = old.vertex_lookup.find(data.vertex_ids[static_cast<std::size_t>(v)]);
        if (old_v == old.vertex_lookup.end()) continue;
        const NodeIndex ov = old_v->second;
        std::int32_t r = kNone;
        if (old.map.degree(ov) > 0)
            r = old.map.face(old.map.first_dart(ov));
        else
            r = detail::isolated_region(old, ov);
        node_region[static_cast<std::size_t>(v)] = r == kNone ? kNone : regions.find(r);
    }

    data.outer = kNone;
    if (old.outer != kNone) {
        const std::int32_t target = regions.find(old.map.face(old.outer));
        const ArcLabel& l = old.map.label(PlanarMap::arc_of(old.outer));
        const EdgeId eid = old.edges[static_cast<std::size_t>(l.edge)].id;
        // Prefer the new dart tracing the same side of the same edge.
        if (auto e = data.edge_lookup.find(eid); e != data.edge_lookup.end()) {
            for (std::int32_t s = 0; s < data.segments(e->second) && data.outer == kNone; ++s) {
                const DartIndex cand = data.dart(e->second, s, (old.outer & 1) == 0);
                if (old_dart_of(cand) == old.outer) data.outer = cand;
            }
        }
        for (FaceIndex f = 0; f < map.face_count() && data.outer == kNone; ++f)
            if (face_region[static_cast<std::size_t>(f)] == target) data.outer = map.face_dart(f);
    }
    detail::nest_from_regions(data, face_region, node_region);
    return DrawingAccess::wrap(std::move(data));
}

/// Spec for `old` minus `deleted` edges and minus the listed (isolated-after-deletion) vertices.
Drawing rebuild_without(const DrawingData& old, const std::vector<char>& deleted, const std::vector<char>& dropped) {
    const PlanarMap& map = old.map;
    const auto n = static_cast<NodeIndex>(old.vertex_ids.size());
    std::vector<char> dissolved(static_cast<std::size_t>(map.node_count()), 0);
    std::vector<ArcIndex> merged;
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(old.edges.size()); ++e) {
        if (!deleted[static_cast<std::size_t>(e)]) continue;
        for (std::int32_t s = 0; s < old.segments(e); ++s) {
            merged.push_back(old.arc_base[static_cast<std::size_t>(e)] + s);
            if (s > 0) dissolved[static_cast<std::size_t>(map.node(old.dart(e, s, true)))] = 1;
        }
    }
    // kept_pos[e][s]: new index of path position s (or -1 when dissolved).
    std::vector<std::vector<std::int32_t>> kept_pos(old.edges.size());
    std::vector<std::vector<std::int32_t>> kept_list(old.edges.size());
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(old.edges.size()); ++e) {
        if (deleted[static_cast<std::size_t>(e)]) continue;
        const std::int32_t segs = old.segments(e);
        auto& pos = kept_pos[static_cast<std::size_t>(e)];
        auto& list = kept_list[static_cast<std::size_t>(e)];
        pos.assign(static_cast<std::size_t>(segs + 1), -1);
        for (std::int32_t p = 0; p <= segs; ++p) {
            const bool keep = p == 0 || p == segs || !dissolved[static_cast<std::size_t>(map.node(old.dart(e, p, true)))];
            if (keep) {
                pos[static_cast<std::size_t>(p)] = static_cast<std::int32_t>(list.size());
                list.push_back(p);
            }
        }
    }

    DrawingSpec spec;
    VertexId next_id = 0;
    for (VertexId id : old.vertex_ids) next_id = std::max(next_id, id + 1);
    for (NodeIndex x = 0; x < map.node_count(); ++x) {
        if (x < n ? static_cast<bool>(dropped[static_cast<std::size_t>(x)]) : static_cast<bool>(dissolved[static_cast<std::size_t>(x)]))
            continue;
        NodeSpec ns;
        ns.kind = map.kind(x);
        ns.id = x < n ? old.vertex_ids[static_cast<std::size_t>(x)] : next_id + (x - n);
        for (DartIndex d : map.rotation(x)) {
            const ArcLabel& l = map.label(PlanarMap::arc_of(d));
            if (deleted[static_cast<std::size_t>(l.edge)]) continue;
            const bool fwd = (d & 1) == 0;
            const auto& pos = kept_pos[static_cast<std::size_t>(l.edge)];
            const std::int32_t seg = fwd ? pos[static_cast<std::size_t>(l.segment)] : pos[static_cast<std::size_t>(l.segment + 1)] - 1;
            ns.rotation.push_back(DartRef{old.edges[static_cast<std::size_t>(l.edge)].id, seg, fwd});
        }
        spec.nodes.push_back(std::move(ns));
    }
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(old.edges.size()); ++e) {
        if (deleted[static_cast<std::size_t>(e)]) continue;
        const Edge& edge = old.edges[static_cast<std::size_t>(e)];
        spec.edges.push_back(EdgeSpec{edge.id, old.vertex_ids[static_cast<std::size_t>(edge.u)],
                                      old.vertex_ids[static_cast<std::size_t>(edge.v)]});
    }
    spec.allow_loops = true;
    auto origin = [&](EdgeId id, std::int32_t seg, bool fwd) {
        const EdgeIndex e = old.edge_lookup.at(id);
        const auto& list = kept_list[static_cast<std::size_t>(e)];
        return fwd ? old.dart(e, list[static_cast<std::size_t>(seg)], true)
                   : old.dart(e, list[static_cast<std::size_t>(seg) + 1] - 1, false);
    };
    return finish_edit(old, spec, merged, origin);
}

}  // namespace

Drawing delete_edges(const Drawing& d, std::span<const EdgeId> edges) {
    const DrawingData& old = DrawingAccess::data(d);
    std::vector<char> deleted(old.edges.size(), 0);
    for (EdgeId id : edges) {
        auto it = old.edge_lookup.find(id);
        if (it == old.edge_lookup.end()) throw DrawingError("unknown edge id " + std::to_string(id));
        deleted[static_cast<std::size_t>(it->second)] = 1;
    }
    return rebuild_without(old, deleted, std::vector<char>(old.vertex_ids.size(), 0));
}

Drawing restrict_to_vertices(const Drawing& d, std::span<const VertexId> keep) {
    const DrawingData& old = DrawingAccess::data(d);
    std::vector<char> dropped(old.vertex_ids.size(), 1);
    for (VertexId id : keep) {
        auto it = old.vertex_lookup.find(id);
        if (it == old.vertex_lookup.end()) throw DrawingError("unknown vertex id " + std::to_string(id));
        dropped[static_cast<std::size_t>(it->second)] = 0;
    }
    std::vector<char> deleted(old.edges.size(), 0);
    for (std::size_t e = 0; e < old.edges.size(); ++e)
        deleted[e] = dropped[static_cast<std::size_t>(old.edges[e].u)] || dropped[static_cast<std::size_t>(old.edges[e].v)];
    return rebuild_without(old, deleted, dropped);
}

Drawing split_vertices(const Drawing& d, std::span<const std::vector<std::int32_t>> blocks,
                       std::vector<std::vector<VertexId>>* copies) {
    const DrawingData& old = DrawingAccess::data(d);
    const PlanarMap& map = old.map;
    const auto n = static_cast<NodeIndex>(old.vertex_ids.size());
    if (blocks.size() != static_cast<std::size_t>(n)) throw DrawingError("one block list per vertex required");
    VertexId next_id = 0;
    for (VertexId id : old.vertex_ids) next_id = std::max(next_id, id + 1);
    if (copies) copies->assign(static_cast<std::size_t>(n), {});

    // Owner id of every dart leaving a vertex.
    std::vector<VertexId> owner(static_cast<std::size_t>(map.dart_count()), 0);
    DrawingSpec spec;
    auto dart_ref = [&](DartIndex x) {
        const ArcLabel& l = map.label(PlanarMap::arc_of(x));
        return DartRef{old.edges[static_cast<std::size_t>(l.edge)].id, l.segment, (x & 1) == 0};
    };
    for (NodeIndex x = 0; x < map.node_count(); ++x) {
        const std::vector<DartIndex> rot = map.rotation(x);
        std::vector<std::int32_t> sizes;
        if (x < n) sizes = blocks[static_cast<std::size_t>(x)];
        if (sizes.empty()) sizes.push_back(static_cast<std::int32_t>(rot.size()));
        std::int32_t total = 0;
        for (std::int32_t s : sizes) {
            if (s < 0) throw DrawingError("negative block size");
            total += s;
        }
        if (total != static_cast<std::int32_t>(rot.size()))
            throw DrawingError("block sizes of vertex " + std::to_string(old.vertex_ids[static_cast<std::size_t>(x)]) +
                               " do not sum to its degree");
        std::size_t at = 0;
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            NodeSpec ns;
            ns.kind = map.kind(x);
            if (x < n) {
                ns.id = b == 0 ? old.vertex_ids[static_cast<std::size_t>(x)] : next_id++;
                if (copies) (*copies)[static_cast<std::size_t>(x)].push_back(ns.id);
            } else {
                ns.id = next_id + (x - n);  // all copies are numbered before the first crossing
            }
            for (std::int32_t i = 0; i < sizes[b]; ++i, ++at) {
                ns.rotation.push_back(dart_ref(rot[at]));
                owner[static_cast<std::size_t>(rot[at])] = ns.id;
            }
            spec.nodes.push_back(std::move(ns));
        }
    }
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(old.edges.size()); ++e) {
        const Edge& edge = old.edges[static_cast<std::size_t>(e)];
        spec.edges.push_back(EdgeSpec{edge.id, owner[static_cast<std::size_t>(old.dart(e, 0, true))],
                                      owner[static_cast<std::size_t>(old.dart(e, old.segments(e) - 1, false))]});
    }
    spec.allow_loops = true;
    auto origin = [&](EdgeId id, std::int32_t seg, bool fwd) { return old.dart(old.edge_lookup.at(id), seg, fwd); };
    return finish_edit(old, spec, {}, origin);
}

std::vector<Drawing> split_components(const Drawing& d) {
    // Components of the abstract multigraph; crossings between different
    // components disappear from both parts.
    const auto n = static_cast<std::size_t>(d.vertex_count());
    std::vector<std::int32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : d.edges()) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
    std::vector<std::vector<VertexId>> groups;
    std::vector<std::int32_t> group_of(n, -1);
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        auto& g = group_of[static_cast<std::size_t>(find(v))];
        if (g < 0) {
            g = static_cast<std::int32_t>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(g)].push_back(d.vertex_id(v));
    }
    std::vector<Drawing> out;
    if (groups.size() == 1) {
        out.push_back(d);
        return out;
    }
    for (auto& ids : groups) {
        std::sort(ids.begin(), ids.end());
        out.push_back(restrict_to_vertices(d, ids));
    }
    return out;
}

Drawing subdivide_loops(const Drawing& d) {
    const DrawingData& old = DrawingAccess::data(d);
    if (!d.has_loops()) return d;
    const PlanarMap& map = old.map;
    VertexId next_vertex = 0;
    for (VertexId id : old.vertex_ids) next_vertex = std::max(next_vertex, id + 1);
    EdgeId next_edge = 0;
    for (const Edge& e : old.edges) next_edge = std::max(next_edge, e.id + 1);

    struct Split {
        std::int32_t at;  // segment carrying the new vertex
        EdgeId second;
        VertexId vertex;
    };
    std::vector<std::optional<Split>> split(old.edges.size());
    std::unordered_map<EdgeId, EdgeIndex> second_of;
    std::int32_t loops = 0;
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(old.edges.size()); ++e) {
        if (!old.edges[static_cast<std::size_t>(e)].is_loop()) continue;
        split[static_cast<std::size_t>(e)] = Split{old.segments(e) / 2, next_edge + loops, next_vertex + loops};
        second_of.emplace(next_edge + loops, e);
        ++loops;
    }
    const VertexId crossing_base = next_vertex + loops;

    DrawingSpec spec;
    auto map_dart = [&](DartIndex dart) {
        const ArcLabel& l = map.label(PlanarMap::arc_of(dart));
        const bool fwd = (dart & 1) == 0;
        const EdgeId id = old.edges[static_cast<std::size_t>(l.edge)].id;
        const auto& sp = split[static_cast<std::size_t>(l.edge)];
        if (!sp || l.segment < sp->at || (l.segment == sp->at && fwd)) return DartRef{id, l.segment, fwd};
        return DartRef{sp->second, l.segment - sp->at, fwd};
    };
    const auto n = static_cast<NodeIndex>(old.vertex_ids.size());
    for (NodeIndex x = 0; x < map.node_count(); ++x) {
        NodeSpec ns;
        ns.kind = map.kind(x);
        ns.id = x < n ? old.vertex_ids[static_cast<std::size_t>(x)] : crossing_base + (x - n);
        for (DartIndex dart : map.rotation(x)) ns.rotation.push_back(map_dart(dart));
        spec.nodes.push_back(std::move(ns));
    }
    for (EdgeIndex e = 0; e < static_cast<EdgeIndex>(old.edges.size()); ++e) {
        const Edge& edge = old.edges[static_cast<std::size_t>(e)];
        const VertexId u = old.vertex_ids[static_cast<std::size_t>(edge.u)];
        if (const auto& sp = split[static_cast<std::size_t>(e)]) {
            spec.edges.push_back(EdgeSpec{edge.id, u, sp->vertex});
            spec.edges.push_back(EdgeSpec{sp->second, sp->vertex, u});
            spec.nodes.push_back(NodeSpec{sp->vertex, NodeKind::Real,
                                          {DartRef{edge.id, sp->at, false}, DartRef{sp->second, 0, true}}});
        } else {
            spec.edges.push_back(EdgeSpec{edge.id, u, old.vertex_ids[static_cast<std::size_t>(edge.v)]});
        }
    }
    auto origin = [&](EdgeId id, std::int32_t seg, bool fwd) {
        if (auto it = second_of.find(id); it != second_of.end()) {
            const std::int32_t at = split[static_cast<std::size_t>(it->second)]->at;
            return old.dart(it->second, seg + at, fwd);
        }
        return old.dart(old.edge_lookup.at(id), seg, fwd);
    };
    return finish_edit(old, spec, {}, origin);
}

Drawing add_apex(const Drawing& d) {
    DrawingSpec spec = describe(d);
    VertexId next = 0;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) next = std::max(next, d.vertex_id(v) + 1);
    // Crossing ids from describe() start at `next`; shift them to free the apex id.
    for (auto& ns : spec.nodes)
        if (ns.kind == NodeKind::Crossing) ns.id += 1;
    spec.nodes.push_back(NodeSpec{next, NodeKind::Real, {}});
    const PlanarMap& map = d.map();
    std::int32_t root = kNone;
    for (std::int32_t c = 0; c < map.component_count() && root == kNone; ++c)
        if (d.component_parent(c) == kNone && map.component_arc_count(c) > 0) root = c;
    if (root != kNone) {
        const DartIndex host = d.outer_dart() ? *d.outer_dart() : d.component_outer(root);
        spec.outer_face = d.dart_ref(host);
        spec.placements.push_back(PlacementSpec{next, d.dart_ref(host), std::nullopt});
    }
    return build_drawing(spec);
}

bool isomorphic(const Drawing& a, const Drawing& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.crossing_count() != b.crossing_count())
        return false;
    const PlanarMap& ma = a.map();
    const PlanarMap& mb = b.map();
    std::vector<NodeIndex> node_map(static_cast<std::size_t>(ma.node_count()), kNone);
    for (VertexIndex v = 0; v < a.vertex_count(); ++v) {
        auto w = b.find_vertex(a.vertex_id(v));
        if (!w) return false;
        node_map[static_cast<std::size_t>(v)] = *w;
    }
    std::vector<DartIndex> dart_map(static_cast<std::size_t>(ma.dart_count()), kNone);
    for (EdgeIndex e = 0; e < a.edge_count(); ++e) {
        const Edge& ea = a.edge(e);
        auto f = b.find_edge(ea.id);
        if (!f) return false;
        const Edge& eb = b.edge(*f);
        if (b.vertex_id(eb.u) != a.vertex_id(ea.u) || b.vertex_id(eb.v) != a.vertex_id(ea.v)) return false;
        const auto arcs_a = a.edge_arcs(e);
        const auto arcs_b = b.edge_arcs(*f);
        if (arcs_a.size() != arcs_b.size()) return false;
        for (std::size_t s = 0; s < arcs_a.size(); ++s) {
            dart_map[static_cast<std::size_t>(2 * arcs_a[s])] = 2 * arcs_b[s];
            dart_map[static_cast<std::size_t>(2 * arcs_a[s] + 1)] = 2 * arcs_b[s] + 1;
        }
    }
    for (DartIndex d = 0; d < ma.dart_count(); ++d) {
        auto& slot = node_map[static_cast<std::size_t>(ma.node(d))];
        const NodeIndex image = mb.node(dart_map[static_cast<std::size_t>(d)]);
        if (slot == kNone)
            slot = image;
        else if (slot != image)
            return false;
    }
    for (NodeIndex x = 0; x < ma.node_count(); ++x) {
        if (ma.degree(x) != mb.degree(node_map[static_cast<std::size_t>(x)])) return false;
        const DartIndex first = ma.first_dart(x);
        if (first == kNone) continue;
        DartIndex da = first;
        DartIndex db = dart_map[static_cast<std::size_t>(first)];
        do {
            if (dart_map[static_cast<std::size_t>(da)] != db) return false;
            da = ma.rot_next(da);
            db = mb.rot_next(db);
        } while (da != first);
    }
    auto same_face = [&](DartIndex da, DartIndex db) {
        return mb.face(dart_map[static_cast<std::size_t>(da)]) == mb.face(db);
    };
    if (a.outer_dart().has_value() != b.outer_dart().has_value()) return false;
    if (a.outer_dart() && !same_face(*a.outer_dart(), *b.outer_dart())) return false;
    // Nesting: every non-root component sits in the same face on both sides.
    for (std::int32_t c = 0; c < ma.component_count(); ++c) {
        const std::int32_t cb = mb.component(node_map[static_cast<std::size_t>(ma.component_nodes(c)[0])]);
        for (std::int32_t k = 0; k < ma.component_count(); ++k) {
            if (k == c || ma.component_arc_count(k) == 0) continue;
            const std::int32_t kb = mb.component(node_map[static_cast<std::size_t>(ma.component_nodes(k)[0])]);
            const FaceIndex fa = a.face_containing(k, c);
            const FaceIndex fb = b.face_containing(kb, cb);
            if (fa == kNone || fb == kNone) {
                if (fa != fb) return false;
                continue;
            }
            if (!same_face(ma.face_dart(fa), mb.face_dart(fb))) return false;
        }
    }
    return true;
}

}  // namespace branching
