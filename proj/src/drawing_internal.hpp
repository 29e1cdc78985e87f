#pragma once

#include "branching/drawing.hpp"

#include <unordered_map>

namespace branching::detail {

struct ComponentNest {
    std::int32_t parent = kNone;
    DartIndex host = kNone;   // dart of the parent whose left face holds this component
    DartIndex outer = kNone;  // own dart whose left face looks toward the parent
};

struct DrawingData {
    std::vector<VertexId> vertex_ids;
    std::unordered_map<VertexId, VertexIndex> vertex_lookup;
    std::vector<Edge> edges;
    std::unordered_map<EdgeId, EdgeIndex> edge_lookup;
    std::vector<ArcIndex> arc_base;  // edge e owns arcs [arc_base[e], arc_base[e+1])
    std::vector<ArcIndex> arc_order; // identity, backs edge_arcs()
    std::vector<std::int32_t> degree;
    PlanarMap map;
    std::vector<ComponentNest> nest;
    DartIndex outer = kNone;
    std::int32_t crossings = 0;

    DartIndex dart(EdgeIndex e, std::int32_t segment, bool forward) const {
        return 2 * (arc_base[static_cast<std::size_t>(e)] + segment) + (forward ? 0 : 1);
    }
    std::int32_t segments(EdgeIndex e) const {
        return arc_base[static_cast<std::size_t>(e) + 1] - arc_base[static_cast<std::size_t>(e)];
    }
};

struct DrawingAccess {
    static const DrawingData& data(const Drawing& d) { return *d.data_; }
    static Drawing wrap(DrawingData&& data) {
        return Drawing(std::make_shared<const DrawingData>(std::move(data)));
    }
};

/// Builds the map, checks every representation invariant except nesting.
DrawingData build_core(const DrawingSpec& spec);
/// Nesting from explicit placements (file input, generators).
void nest_from_placements(DrawingData& data, const DrawingSpec& spec);
/// Nesting from a region label per face and per isolated node: components
/// whose faces share a region label touch the same region of the sphere.
void nest_from_regions(DrawingData& data, const std::vector<std::int32_t>& face_region,
                       const std::vector<std::int32_t>& node_region);
/// Region label of every face of an existing drawing (faces joined by nesting);
/// isolated nodes get the label of their host face.
struct RegionLabels {
    std::vector<std::int32_t> parent;  // union-find over faces
    std::int32_t find(std::int32_t f);
    void unite(std::int32_t a, std::int32_t b);
};
RegionLabels initial_regions(const DrawingData& data);
/// Region of an isolated node in `data` (kNone when nothing has darts).
std::int32_t isolated_region(const DrawingData& data, NodeIndex v);

}  // namespace branching::detail
