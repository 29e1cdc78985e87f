#pragma once

#include "branching/drawing.hpp"

#include <string>
#include <vector>

namespace branching {

enum class ViolationKind : std::uint8_t { EmptyLens, AdjacentCross, DoubleCross, TriplePoint };

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind = ViolationKind::EmptyLens;
    std::vector<EdgeId> edges;
    /// Crossing witnesses, numbered 0.. in crossing-node order.
    std::vector<std::int32_t> crossings;
    /// For empty lenses: which side is empty.
    LensSideTag empty_side = LensSideTag::Unclassified;
    bool both_sides_empty = false;
};

struct BranchingReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::size_t count(ViolationKind kind) const;
};

/// Checks the three branching conditions and lists every violation.
BranchingReport check_branching(const Drawing& d);

/// Parallel edge pairs (by id, first < second in edge order) whose lens has an
/// empty side. Same data as the EmptyLens violations of check_branching.
std::vector<Violation> empty_lenses(const Drawing& d);

struct StarSequence {
    VertexId center = 0;
    std::vector<VertexId> symbols;   // neighbor ids around the center, counterclockwise
    std::vector<VertexId> extended;  // symbols followed by symbols.front()
    std::int32_t augmented = 0;      // edges added to former non-neighbors
};

/// Neighbor sequence of v after removing all edges not at v and joining v to
/// each non-neighbor by one crossing-free edge.
StarSequence star_sequence(const Drawing& d, VertexId v);

/// No two consecutive symbols equal and no subsequence a..b..a..b with a != b.
bool ds2_check(const std::vector<VertexId>& sequence);

/// Longest order-2 Davenport-Schinzel sequence over `symbols` symbols: 2s - 1.
std::int64_t ds2_max_length(std::int64_t symbols);

}  // namespace branching
