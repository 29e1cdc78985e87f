#include "lens_internal.hpp"

#include <algorithm>
#include <deque>

namespace branching {

namespace detail {

LensOracle::LensOracle(const Drawing& d) : drawing_(d) {
    const PlanarMap& map = d.map();
    parent_face_.assign(static_cast<std::size_t>(map.face_count()), kNone);
    parent_arc_.assign(static_cast<std::size_t>(map.face_count()), kNone);
    bfs_order_.resize(static_cast<std::size_t>(map.component_count()));
    std::vector<char> seen(static_cast<std::size_t>(map.face_count()), 0);
    for (std::int32_t c = 0; c < map.component_count(); ++c) {
        const auto comp_faces = map.component_faces(c);
        if (comp_faces.empty()) continue;
        auto& order = bfs_order_[static_cast<std::size_t>(c)];
        std::deque<FaceIndex> queue{comp_faces[0]};
        seen[static_cast<std::size_t>(comp_faces[0])] = 1;
        while (!queue.empty()) {
            const FaceIndex f = queue.front();
            queue.pop_front();
            order.push_back(f);
            const DartIndex start = map.face_dart(f);
            DartIndex x = start;
            do {
                const FaceIndex g = map.face(PlanarMap::twin(x));
                if (!seen[static_cast<std::size_t>(g)]) {
                    seen[static_cast<std::size_t>(g)] = 1;
                    parent_face_[static_cast<std::size_t>(g)] = f;
                    parent_arc_[static_cast<std::size_t>(g)] = PlanarMap::arc_of(x);
                    queue.push_back(g);
                }
                x = map.face_next(x);
            } while (x != start);
        }
    }
}

FaceIndex LensOracle::face_of_vertex(std::int32_t comp, VertexIndex v) const {
    const PlanarMap& map = drawing_.map();
    if (map.component(v) == comp) return map.face(map.first_dart(v));
    return drawing_.face_containing(comp, map.component(v));
}

const std::vector<EdgeIndex>& LensOracle::odd_edges(FaceIndex f) {
    auto it = odd_cache_.find(f);
    if (it != odd_cache_.end()) return it->second;
    std::vector<EdgeIndex> crossed;
    const PlanarMap& map = drawing_.map();
    for (FaceIndex g = f; parent_face_[static_cast<std::size_t>(g)] != kNone; g = parent_face_[static_cast<std::size_t>(g)]) {
        const ArcLabel& l = map.label(parent_arc_[static_cast<std::size_t>(g)]);
        if (!l.is_virtual()) crossed.push_back(l.edge);
    }
    std::sort(crossed.begin(), crossed.end());
    std::vector<EdgeIndex> odd;
    for (std::size_t i = 0; i < crossed.size();) {
        std::size_t j = i;
        while (j < crossed.size() && crossed[j] == crossed[i]) ++j;
        if ((j - i) % 2 == 1) odd.push_back(crossed[i]);
        i = j;
    }
    return odd_cache_.emplace(f, std::move(odd)).first->second;
}

bool LensOracle::far_side(FaceIndex f, EdgeIndex e, EdgeIndex g) {
    const auto& odd = odd_edges(f);
    return std::binary_search(odd.begin(), odd.end(), e) != std::binary_search(odd.begin(), odd.end(), g);
}

std::vector<char> LensOracle::face_sides(std::int32_t comp, EdgeIndex e, EdgeIndex g) const {
    const PlanarMap& map = drawing_.map();
    std::vector<char> side(static_cast<std::size_t>(map.face_count()), 0);
    for (FaceIndex f : bfs_order_[static_cast<std::size_t>(comp)]) {
        const FaceIndex p = parent_face_[static_cast<std::size_t>(f)];
        if (p == kNone) continue;
        const ArcLabel& l = map.label(parent_arc_[static_cast<std::size_t>(f)]);
        side[static_cast<std::size_t>(f)] = static_cast<char>(side[static_cast<std::size_t>(p)] ^ (l.edge == e || l.edge == g ? 1 : 0));
    }
    return side;
}

FaceIndex LensOracle::outer_face_in(std::int32_t comp) const {
    const auto outer = drawing_.outer_dart();
    if (!outer) return kNone;
    const PlanarMap& map = drawing_.map();
    const std::int32_t oc = map.component(map.node(*outer));
    if (oc == comp) return map.face(*outer);
    return drawing_.face_containing(comp, oc);
}

}  // namespace detail

std::pair<LensSide, LensSide> lens_sides(const Drawing& d, EdgeId e_id, EdgeId f_id) {
    const auto e = d.find_edge(e_id);
    const auto f = d.find_edge(f_id);
    if (!e || !f) throw DrawingError("lens_sides: unknown edge");
    const Edge& a = d.edge(*e);
    const Edge& b = d.edge(*f);
    const bool parallel = *e != *f && ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u));
    if (!parallel || a.is_loop()) throw DrawingError("lens_sides: edges are not parallel");
    for (NodeIndex x = d.vertex_count(); x < d.map().node_count(); ++x) {
        const auto [p, q] = d.crossing_edges(x);
        if ((p == *e && q == *f) || (p == *f && q == *e)) throw DrawingError("lens_sides: edges cross each other");
    }
    const PlanarMap& map = d.map();
    const std::int32_t comp = map.component(a.u);
    detail::LensOracle oracle(d);
    const auto side = oracle.face_sides(comp, *e, *f);
    std::pair<LensSide, LensSide> out;
    out.first.first = out.second.first = e_id;
    out.first.second = out.second.second = f_id;
    for (FaceIndex g : map.component_faces(comp))
        (side[static_cast<std::size_t>(g)] ? out.second : out.first).faces.push_back(g);
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        if (v == a.u || v == a.v) continue;
        const FaceIndex g = oracle.face_of_vertex(comp, v);
        (side[static_cast<std::size_t>(g)] ? out.second : out.first).enclosed_vertices.push_back(d.vertex_id(v));
    }
    if (const FaceIndex outer = oracle.outer_face_in(comp); outer != kNone) {
        const bool outer_side = side[static_cast<std::size_t>(outer)] != 0;
        out.first.tag = outer_side ? LensSideTag::Bounded : LensSideTag::Unbounded;
        out.second.tag = outer_side ? LensSideTag::Unbounded : LensSideTag::Bounded;
    }
    return out;
}

}  // namespace branching
