#pragma once

#include "branching/planar_map.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace branching {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;
using VertexIndex = std::int32_t;
using EdgeIndex = std::int32_t;

/// Raised when a drawing description violates a representation invariant.
class DrawingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Description accepted by build_drawing. Real node ids double as vertex ids.
// ---------------------------------------------------------------------------

/// End of one segment of an edge: `forward` is the end at the segment's tail
/// (the end nearer to the edge's first endpoint u).
struct DartRef {
    EdgeId edge = 0;
    std::int32_t segment = 0;
    bool forward = true;
    friend bool operator==(const DartRef&, const DartRef&) = default;
};

struct NodeSpec {
    std::int64_t id = 0;
    NodeKind kind = NodeKind::Real;
    std::vector<DartRef> rotation;  // counterclockwise
};

struct EdgeSpec {
    EdgeId id = 0;
    std::int64_t u = 0;
    std::int64_t v = 0;
};

/// The component containing `node` sits in the face left of `host`; `outer`
/// names the face of that component which faces the host.
struct PlacementSpec {
    std::int64_t node = 0;
    DartRef host;
    std::optional<DartRef> outer;
};

struct DrawingSpec {
    std::vector<NodeSpec> nodes;
    std::vector<EdgeSpec> edges;
    std::optional<DartRef> outer_face;
    std::vector<PlacementSpec> placements;
    bool allow_loops = false;
};

// ---------------------------------------------------------------------------

struct Edge {
    EdgeId id = 0;
    VertexIndex u = 0;
    VertexIndex v = 0;
    bool is_loop() const { return u == v; }
};

namespace detail {
struct DrawingData;
struct DrawingAccess;
}  // namespace detail

/// Immutable topological multigraph drawing: the abstract multigraph together
/// with its planarization. Real vertex i is map node i; crossing nodes follow.
/// Copies share storage.
class Drawing {
public:
    Drawing();

    std::int32_t vertex_count() const;
    std::int32_t edge_count() const;
    /// Number of crossing nodes c(G).
    std::int32_t crossing_count() const;

    VertexId vertex_id(VertexIndex v) const;
    std::optional<VertexIndex> find_vertex(VertexId id) const;
    const Edge& edge(EdgeIndex e) const;
    std::span<const Edge> edges() const;
    std::optional<EdgeIndex> find_edge(EdgeId id) const;
    std::int32_t degree(VertexIndex v) const;
    /// Largest number of edges joining one vertex pair.
    std::int32_t max_multiplicity() const;
    bool has_loops() const;

    const PlanarMap& map() const;
    /// Arcs of edge e from u to v; arc direction follows the edge.
    std::span<const ArcIndex> edge_arcs(EdgeIndex e) const;
    /// Edge indices passing through a crossing node (always two).
    std::pair<EdgeIndex, EdgeIndex> crossing_edges(NodeIndex crossing) const;
    /// Number of crossing nodes on the path of e.
    std::int32_t crossings_on(EdgeIndex e) const;

    std::optional<DartIndex> outer_dart() const;
    /// Nesting of map components on the sphere (root has parent kNone).
    std::int32_t component_parent(std::int32_t comp) const;
    DartIndex component_host(std::int32_t comp) const;
    DartIndex component_outer(std::int32_t comp) const;
    /// Face of component `comp` containing every point of component `other`.
    FaceIndex face_containing(std::int32_t comp, std::int32_t other) const;

    DartRef dart_ref(DartIndex d) const;
    DartIndex dart_index(const DartRef& ref) const;

private:
    friend struct detail::DrawingAccess;
    explicit Drawing(std::shared_ptr<const detail::DrawingData> data);
    std::shared_ptr<const detail::DrawingData> data_;
};

/// Builds and verifies a drawing; throws DrawingError with a diagnostic.
Drawing build_drawing(const DrawingSpec& spec);
/// Inverse of build_drawing: canonical description (crossings renumbered).
DrawingSpec describe(const Drawing& d);

std::vector<std::vector<DartIndex>> faces(const Drawing& d);

enum class LensSideTag : std::uint8_t { Unclassified, Bounded, Unbounded };

struct LensSide {
    EdgeId first = 0;
    EdgeId second = 0;
    std::vector<FaceIndex> faces;               // faces of the pair's component
    std::vector<VertexId> enclosed_vertices;    // excluding the two endpoints
    LensSideTag tag = LensSideTag::Unclassified;
};

/// Both regions of the closed curve formed by two parallel, non-crossing edges.
std::pair<LensSide, LensSide> lens_sides(const Drawing& d, EdgeId e, EdgeId f);

Drawing delete_edges(const Drawing& d, std::span<const EdgeId> edges);
/// Keeps the listed vertices and the edges with both endpoints among them.
Drawing restrict_to_vertices(const Drawing& d, std::span<const VertexId> keep);
std::vector<Drawing> split_components(const Drawing& d);
/// Replaces vertex index v by copies holding consecutive runs of its rotation
/// (from its first dart) of lengths blocks[v]; an empty list keeps v whole.
/// The first copy keeps v's id, later copies get fresh ids, listed per vertex
/// in `copies` when given. Crossings are untouched.
Drawing split_vertices(const Drawing& d, std::span<const std::vector<std::int32_t>> blocks,
                       std::vector<std::vector<VertexId>>* copies = nullptr);
Drawing subdivide_loops(const Drawing& d);
Drawing add_apex(const Drawing& d);

/// Combinatorial equality up to relabeling of crossing nodes and cyclic
/// rotation shifts; vertex and edge ids must match.
bool isomorphic(const Drawing& a, const Drawing& b);

/// Sum of squared degrees.
std::int64_t degree_square_sum(const Drawing& d);

}  // namespace branching
