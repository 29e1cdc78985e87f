#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace branching {

using NodeIndex = std::int32_t;
using ArcIndex = std::int32_t;
using DartIndex = std::int32_t;
using FaceIndex = std::int32_t;
inline constexpr std::int32_t kNone = -1;

enum class NodeKind : std::uint8_t { Real, Crossing };

/// Owner of an arc: which edge it belongs to and the segment position along that
/// edge. Scaffolding arcs (component links, triangulation diagonals) carry
/// edge == kNone.
struct ArcLabel {
    std::int32_t edge = kNone;
    std::int32_t segment = 0;
    bool is_virtual() const { return edge == kNone; }
};

/// Rotation-system map on the sphere.
///
/// Arc `a` owns darts 2a (leaving its tail) and 2a+1 (leaving its head). Each
/// node keeps its darts in a doubly linked counterclockwise cycle. The face to
/// the left of dart d continues with face_next(d) = rot_prev(twin(d)), so the
/// corner between d and rot_next(d) belongs to face(d).
class PlanarMap {
public:
    NodeIndex add_node(NodeKind kind);
    /// New arc whose darts are not yet in any rotation.
    void reserve(std::size_t nodes, std::size_t arcs);
    ArcIndex add_arc(NodeIndex tail, NodeIndex head, ArcLabel label);
    /// Appends d at the end of its node's counterclockwise cycle.
    void append_rotation(DartIndex d);
    /// Inserts d immediately after `anchor` (counterclockwise) at anchor's node.
    void insert_after(DartIndex anchor, DartIndex d);
    /// Adds a scaffolding arc through the corners after `from` and after `to`.
    /// Both corners must belong to the same face for the result to stay planar.
    ArcIndex add_chord(DartIndex from, DartIndex to);
    /// Adds a scaffolding arc from an isolated node into the corner after `to`.
    ArcIndex attach_isolated(NodeIndex isolated, DartIndex to);

    /// Recomputes face orbits and connected components.
    void finalize();

    static DartIndex twin(DartIndex d) { return d ^ 1; }
    static ArcIndex arc_of(DartIndex d) { return d >> 1; }

    std::int32_t node_count() const { return static_cast<std::int32_t>(kind_.size()); }
    std::int32_t arc_count() const { return static_cast<std::int32_t>(label_.size()); }
    std::int32_t dart_count() const { return 2 * arc_count(); }

    NodeKind kind(NodeIndex v) const { return kind_[static_cast<std::size_t>(v)]; }
    NodeIndex node(DartIndex d) const { return dart_node_[static_cast<std::size_t>(d)]; }
    NodeIndex target(DartIndex d) const { return node(twin(d)); }
    const ArcLabel& label(ArcIndex a) const { return label_[static_cast<std::size_t>(a)]; }
    DartIndex rot_next(DartIndex d) const { return rot_next_[static_cast<std::size_t>(d)]; }
    DartIndex rot_prev(DartIndex d) const { return rot_prev_[static_cast<std::size_t>(d)]; }
    DartIndex face_next(DartIndex d) const { return rot_prev(twin(d)); }
    DartIndex first_dart(NodeIndex v) const { return first_[static_cast<std::size_t>(v)]; }
    std::int32_t degree(NodeIndex v) const { return degree_[static_cast<std::size_t>(v)]; }
    /// Counterclockwise darts leaving v, starting at first_dart(v).
    std::vector<DartIndex> rotation(NodeIndex v) const;

    // Valid after finalize().
    std::int32_t face_count() const { return static_cast<std::int32_t>(face_dart_.size()); }
    FaceIndex face(DartIndex d) const { return face_of_[static_cast<std::size_t>(d)]; }
    DartIndex face_dart(FaceIndex f) const { return face_dart_[static_cast<std::size_t>(f)]; }
    std::int32_t face_size(FaceIndex f) const { return face_size_[static_cast<std::size_t>(f)]; }
    std::int32_t component_count() const { return static_cast<std::int32_t>(comp_nodes_.size()); }
    std::int32_t component(NodeIndex v) const { return comp_of_[static_cast<std::size_t>(v)]; }
    std::span<const NodeIndex> component_nodes(std::int32_t c) const {
        return comp_nodes_[static_cast<std::size_t>(c)];
    }
    std::int32_t component_arc_count(std::int32_t c) const { return comp_arcs_[static_cast<std::size_t>(c)]; }
    std::span<const FaceIndex> component_faces(std::int32_t c) const {
        return comp_faces_[static_cast<std::size_t>(c)];
    }
    /// Component whose V - A + F differs from 2, or kNone. Isolated nodes count as valid.
    std::int32_t euler_violation() const;

private:
    std::vector<NodeKind> kind_;
    std::vector<ArcLabel> label_;
    std::vector<NodeIndex> dart_node_;
    std::vector<DartIndex> rot_next_;
    std::vector<DartIndex> rot_prev_;
    std::vector<DartIndex> first_;
    std::vector<std::int32_t> degree_;

    std::vector<FaceIndex> face_of_;
    std::vector<DartIndex> face_dart_;
    std::vector<std::int32_t> face_size_;
    std::vector<std::int32_t> comp_of_;
    std::vector<std::vector<NodeIndex>> comp_nodes_;
    std::vector<std::int32_t> comp_arcs_;
    std::vector<std::vector<FaceIndex>> comp_faces_;
};

}  // namespace branching
