#pragma once

#include "branching/drawing.hpp"

#include <cstdint>
#include <vector>

namespace branching {

struct GeoPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

struct GeoVertex {
    VertexId id = 0;
    GeoPoint at;
};

/// Polyline from vertex u to vertex v through the listed bend points.
struct GeoEdge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;
    std::vector<GeoPoint> waypoints;
};

struct GeometricDrawing {
    std::vector<GeoVertex> vertices;
    std::vector<GeoEdge> edges;
};

/// Planarizes a drawing given by integer coordinates. All predicates are exact;
/// coordinates must stay within +-2^40. Throws DrawingError on triple points,
/// overlapping or touching segments and vertices on edge interiors.
Drawing import_geometric(const GeometricDrawing& g);

/// Adds (dx, dy) to every coordinate.
GeometricDrawing translate(const GeometricDrawing& g, std::int64_t dx, std::int64_t dy);
/// Rotates every coordinate by 90 degrees counterclockwise about the origin.
GeometricDrawing rotate90(const GeometricDrawing& g);

}  // namespace branching
