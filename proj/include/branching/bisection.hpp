#pragma once

#include "branching/config.hpp"
#include "branching/drawing.hpp"
#include "branching/separator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace branching {

/// Failure of one bisection stage; what() starts with "[stage]".
class BisectionError : public std::runtime_error {
public:
    BisectionError(const std::string& stage, const std::string& message)
        : std::runtime_error("[" + stage + "] " + message), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

/// The drawing's planarization with every vertex of degree d replaced by a
/// d x d grid. Node r*d + c of vertex i's block sits at column c, row r; the
/// top row r = d-1 holds the special boundary nodes, and the edge leaving at
/// rotation position j attaches to column d-1-j. Arcs [0, drawing_arcs) are the
/// drawing's arcs in the same order, so drawing darts are valid H darts.
struct GridExpansion {
    PlanarMap h;  // connected (nested components linked by scaffolding arcs)
    std::vector<Rational> weight;
    std::vector<VertexIndex> origin;     // per H node: its vertex, kNone for crossings
    std::vector<NodeIndex> grid_start;   // per vertex: first node of its block
    std::vector<std::int32_t> grid_side; // per vertex: d_i, 0 for an isolated vertex
    std::int32_t drawing_arcs = 0;

    /// Special boundary node j (0 <= j < d_i) of vertex v, j in rotation order.
    NodeIndex special(VertexIndex v, std::int32_t j) const;
    bool is_special(NodeIndex x) const;
};

GridExpansion expand(const Drawing& d);

enum class WeightClass : std::uint8_t { A, B, C };

struct GridClass {
    std::int32_t inside = 0;   // |A_i|: block nodes inside the cycle
    std::int32_t outside = 0;  // |B_i|
    std::int32_t on_cycle = 0; // |C_i|
    Rational w_inside;         // w(A_i)
    Rational w_outside;        // w(B_i)
    WeightClass weight_class = WeightClass::C;
    bool type1 = false;        // |C_i| >= d_i / 6 (isolated vertices: on the cycle)
};

struct GridClassification {
    std::vector<GridClass> grids;  // per vertex
};

/// Grid classes from a separator of the (triangulated) expansion. Throws
/// BisectionError("classify") when the grid-cut inequality fails.
GridClassification classify(const GridExpansion& x, const SeparatorCycle& s, const Constants& k = {});

struct Partition {
    std::vector<VertexIndex> part_a;
    std::vector<VertexIndex> part_b;
};

/// Class A to part A, class B to part B, class C by ascending vertex index to
/// the currently smaller part (A on ties). Throws BisectionError("partition")
/// when a part falls outside [n/5, 4n/5].
Partition partition(const GridClassification& cls, const Constants& k = {});

struct LensRepair {
    Drawing drawing;
    std::vector<EdgeId> deleted;
};

/// Deletes the smaller-id edge of every parallel pair with an empty lens side.
LensRepair repair_empty_lenses(const Drawing& part);

struct BisectionStats {
    std::int64_t n = 0;
    std::int64_t crossings = 0;
    std::int64_t degree_square_sum = 0;
    std::int64_t measure = 0;  // c(G) + sum d_i^2 + n
    std::int32_t h_nodes = 0;
    std::int32_t separator_size = 0;
    bool separator_used = false;  // false only for expansions with fewer than 4 nodes
    bool separator_verified = false;
    bool separator_within_target = false;
    Rational separator_w_inside, separator_w_outside, separator_w_cycle;
    std::int32_t class_a = 0, class_b = 0, class_c = 0, type1 = 0;
    std::int32_t cut_edges = 0;
    std::int32_t cut_through_cycle = 0;  // planarization path meets the cycle
    std::int32_t cut_minority = 0;       // otherwise: leaves a grid on the far side of its part
    std::int32_t repairs_a = 0, repairs_b = 0;
    Rational bound_scale;                // max(1, c_sep / 3)
    bool cut_bound_ok = false;           // removed <= bisection_factor * scale * sqrt(measure)
    bool cycle_cut_ok = false;           // cut <= cycle_cut_factor * scale * sqrt(measure)
    bool repairs_ok = false;             // repairs per part <= 2 sqrt(c)
    std::int32_t removed() const { return cut_edges + repairs_a + repairs_b; }
};

struct BisectionResult {
    Drawing part_a;
    Drawing part_b;
    std::vector<EdgeId> cut;
    std::vector<EdgeId> repaired_a;
    std::vector<EdgeId> repaired_b;
    BisectionStats stats;
};

/// Two branching parts of sizes in [n/5, 4n/5]. Requires a branching drawing
/// with n >= 2. Bound checks are reported in stats, structural failures throw
/// BisectionError.
BisectionResult bisect(const Drawing& d, const Constants& k = {});

}  // namespace branching
