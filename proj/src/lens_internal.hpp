#pragma once

#include "branching/drawing.hpp"

#include <unordered_map>

namespace branching::detail {

/// Side tests for closed curves formed by edge pairs. A breadth-first tree over
/// each component's dual graph fixes a root face; a face's side of a curve is
/// the parity of curve arcs crossed on its tree path to the root.
class LensOracle {
public:
    explicit LensOracle(const Drawing& d);

    /// Face of component `comp` that contains vertex v (v must not be a curve endpoint).
    FaceIndex face_of_vertex(std::int32_t comp, VertexIndex v) const;
    /// True when face f lies on the far side (from the root face) of the curve e + g.
    bool far_side(FaceIndex f, EdgeIndex e, EdgeIndex g);
    /// Side assignment of every face of a component for the curve e + g.
    std::vector<char> face_sides(std::int32_t comp, EdgeIndex e, EdgeIndex g) const;
    /// Face standing for the unbounded region inside component `comp`, or kNone.
    FaceIndex outer_face_in(std::int32_t comp) const;

private:
    const std::vector<EdgeIndex>& odd_edges(FaceIndex f);

    const Drawing& drawing_;
    std::vector<FaceIndex> parent_face_;
    std::vector<ArcIndex> parent_arc_;
    std::vector<std::vector<FaceIndex>> bfs_order_;  // per component
    std::unordered_map<FaceIndex, std::vector<EdgeIndex>> odd_cache_;
};

}  // namespace branching::detail
