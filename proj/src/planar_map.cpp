#include "branching/planar_map.hpp"

#include <cassert>

namespace branching {

void PlanarMap::reserve(std::size_t nodes, std::size_t arcs) {
    kind_.reserve(nodes);
    first_.reserve(nodes);
    degree_.reserve(nodes);
    label_.reserve(arcs);
    dart_node_.reserve(2 * arcs);
    rot_next_.reserve(2 * arcs);
    rot_prev_.reserve(2 * arcs);
}

NodeIndex PlanarMap::add_node(NodeKind kind) {
    kind_.push_back(kind);
    first_.push_back(kNone);
    degree_.push_back(0);
    return static_cast<NodeIndex>(kind_.size() - 1);
}

ArcIndex PlanarMap::add_arc(NodeIndex tail, NodeIndex head, ArcLabel label) {
    label_.push_back(label);
    dart_node_.push_back(tail);
    dart_node_.push_back(head);
    rot_next_.push_back(kNone);
    rot_next_.push_back(kNone);
    rot_prev_.push_back(kNone);
    rot_prev_.push_back(kNone);
    return static_cast<ArcIndex>(label_.size() - 1);
}

void PlanarMap::append_rotation(DartIndex d) {
    const auto v = static_cast<std::size_t>(node(d));
    const auto di = static_cast<std::size_t>(d);
    if (first_[v] == kNone) {
        first_[v] = d;
        rot_next_[di] = d;
        rot_prev_[di] = d;
    } else {
        const DartIndex head = first_[v];
        const DartIndex last = rot_prev_[static_cast<std::size_t>(head)];
        rot_next_[static_cast<std::size_t>(last)] = d;
        rot_prev_[di] = last;
        rot_next_[di] = head;
        rot_prev_[static_cast<std::size_t>(head)] = d;
    }
    ++degree_[v];
}

void PlanarMap::insert_after(DartIndex anchor, DartIndex d) {
    assert(node(anchor) == node(d));
    const DartIndex after = rot_next(anchor);
    rot_next_[static_cast<std::size_t>(anchor)] = d;
    rot_prev_[static_cast<std::size_t>(d)] = anchor;
    rot_next_[static_cast<std::size_t>(d)] = after;
    rot_prev_[static_cast<std::size_t>(after)] = d;
    ++degree_[static_cast<std::size_t>(node(d))];
}

ArcIndex PlanarMap::add_chord(DartIndex from, DartIndex to) {
    const ArcIndex a = add_arc(node(from), node(to), ArcLabel{});
    insert_after(from, 2 * a);
    insert_after(to, 2 * a + 1);
    return a;
}

ArcIndex PlanarMap::attach_isolated(NodeIndex isolated, DartIndex to) {
    assert(degree(isolated) == 0);
    const ArcIndex a = add_arc(isolated, node(to), ArcLabel{});
    append_rotation(2 * a);
    insert_after(to, 2 * a + 1);
    return a;
}

std::vector<DartIndex> PlanarMap::rotation(NodeIndex v) const {
    std::vector<DartIndex> out;
    const DartIndex start = first_dart(v);
    if (start == kNone) return out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    DartIndex d = start;
    do {
        out.push_back(d);
        d = rot_next(d);
    } while (d != start);
    return out;
}

void PlanarMap::finalize() {
    const auto darts = static_cast<std::size_t>(dart_count());
    face_of_.assign(darts, kNone);
    face_dart_.clear();
    face_size_.clear();
    for (std::size_t start = 0; start < darts; ++start) {
        if (face_of_[start] != kNone) continue;
        const auto f = static_cast<FaceIndex>(face_dart_.size());
        face_dart_.push_back(static_cast<DartIndex>(start));
        std::int32_t size = 0;
        auto d = static_cast<DartIndex>(start);
        do {
            face_of_[static_cast<std::size_t>(d)] = f;
            ++size;
            d = face_next(d);
        } while (d != static_cast<DartIndex>(start));
        face_size_.push_back(size);
    }

    const auto nodes = static_cast<std::size_t>(node_count());
    comp_of_.assign(nodes, kNone);
    comp_nodes_.clear();
    comp_arcs_.clear();
    comp_faces_.clear();
    std::vector<NodeIndex> stack;
    for (std::size_t s = 0; s < nodes; ++s) {
        if (comp_of_[s] != kNone) continue;
        const auto c = static_cast<std::int32_t>(comp_nodes_.size());
        comp_nodes_.emplace_back();
        comp_arcs_.push_back(0);
        comp_faces_.emplace_back();
        comp_of_[s] = c;
        stack.push_back(static_cast<NodeIndex>(s));
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            comp_nodes_.back().push_back(v);
            const DartIndex first = first_dart(v);
            if (first == kNone) continue;
            DartIndex d = first;
            do {
                const NodeIndex w = target(d);
                if (comp_of_[static_cast<std::size_t>(w)] == kNone) {
                    comp_of_[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
                d = rot_next(d);
            } while (d != first);
        }
    }
    for (ArcIndex a = 0; a < arc_count(); ++a) ++comp_arcs_[static_cast<std::size_t>(component(node(2 * a)))];
    for (FaceIndex f = 0; f < face_count(); ++f)
        comp_faces_[static_cast<std::size_t>(component(node(face_dart(f))))].push_back(f);
}

std::int32_t PlanarMap::euler_violation() const {
    for (std::int32_t c = 0; c < component_count(); ++c) {
        const auto v = static_cast<std::int64_t>(component_nodes(c).size());
        const std::int64_t a = component_arc_count(c);
        const auto f = static_cast<std::int64_t>(component_faces(c).size());
        if (a == 0 && v == 1) continue;
        if (v - a + f != 2) return c;
    }
    return kNone;
}

}  // namespace branching
