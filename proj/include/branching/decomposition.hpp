#pragma once

#include "branching/bisection.hpp"
#include "branching/config.hpp"
#include "branching/drawing.hpp"
#include "branching/validate.hpp"

#include <string>
#include <vector>

namespace branching {

struct SplitResult {
    Drawing drawing;
    Rational degree_cap;               // d = 2e/n of the input
    std::vector<VertexId> origin;      // per vertex index of `drawing`: original vertex id
    std::int32_t split_vertices = 0;   // vertices replaced by two or more copies
    std::vector<Violation> violations; // branching violations after the split (expected empty)
};

/// Splits every vertex of degree above d = 2e/n into ceil(deg/d) copies; the
/// j-th dart of its rotation (1-based) goes to copy i with d(i-1) < j <= d i.
/// Copies get at most ceil(d) darts. Requires e > 0.
SplitResult split_high_degree(const Drawing& d);

struct PieceRecord {
    std::int32_t vertices = 0;
    std::int32_t edges = 0;
    std::int32_t crossings = 0;
    bool large = false;
    std::int32_t removed = 0;  // edges deleted by its bisection (large pieces)
    std::int32_t repairs = 0;  // lens repairs among them
    bool bisection_bounds_ok = true;  // removed <= 22 (c_sep/3) sqrt(c + sum d^2 + n), separator verified
    // Per-part repairs <= 2 sqrt(c). Recorded only: a single empty lens per
    // part is possible even when c = 0.
    bool repairs_within_sqrt_c = true;
};

struct DecompositionStep {
    std::int32_t index = 0;         // i
    Rational shrink_power;          // (4/5)^i
    std::vector<PieceRecord> pieces;  // G_j^i in trace order
    std::int32_t large_count = 0;   // m_i
    bool stop = false;              // stopping rule fired before bisecting
    bool large_count_ok = true;     // m_i <= (5/4)^{i+1}
    bool sandwich_ok = true;        // every piece within the size window
    bool sqrt_sum_ok = true;        // sum sqrt c_j <= sqrt(m_i sum c_j)
    std::int64_t deleted = 0;
    std::int64_t cumulative_deleted = 0;
};

struct DecompositionTrace {
    SplitResult split;
    std::int32_t n = 0;  // of the split drawing
    std::int32_t e = 0;
    std::int64_t crossings = 0;
    std::vector<DecompositionStep> steps;
    std::int32_t stop_step = 0;            // k
    bool stop_rule_first = true;           // no earlier step satisfied the stopping rule
    std::int64_t total_deleted = 0;
    std::int64_t final_edges = 0;          // e(G^k)
    std::vector<std::int64_t> final_caps;  // n(n-2) edge caps of the final pieces
    bool final_cap_ok = true;              // each final piece within its cap
    bool final_small_ok = true;            // each final piece has fewer than e/(2n) vertices
    std::vector<Drawing> final_pieces;

    bool all_ok() const;
};

/// Edge cap of a branching drawing on n vertices: n(n-2) for n >= 3, one edge
/// on two vertices, none on one.
std::int64_t piece_edge_cap(std::int64_t n);

/// Splits high degrees, then repeatedly bisects pieces with at least
/// (4/5)^{i+1} n vertices until (4/5)^i < e/(2n^2). Pieces with fewer than two
/// vertices are never bisected.
DecompositionTrace decompose(const Drawing& d, const Constants& k = {});

/// One inequality of the deletion-counting chain.
struct ChainCheck {
    std::string id;
    std::string statement;
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

struct ChainInput {
    std::int64_t n = 0;  // after splitting
    std::int64_t e = 0;
    std::int64_t crossings = 0;
    std::int64_t total_deleted = 0;
    std::int64_t final_edges = 0;
    std::int64_t final_cap_sum = 0;
};

/// Evaluates the chain in order: "start-bound" (c(G) < 4ce^3/n^2), "deletion-budget"
/// (deletions <= 350(2 sqrt(c) e + 3 sqrt(en)) < e/2), "final-edges"
/// (e(G^k) > e/2) and "edge-cap" (e(G^k) <= sum of caps < e/2).
std::vector<ChainCheck> check_deletion_chain(const ChainInput& in, const Constants& k = {});

struct CrossingAudit {
    std::int64_t n = 0;
    std::int64_t e = 0;
    std::int64_t crossings = 0;
    std::string route;  // "sparse" (e <= 10^8 n) or "dense"
    Rational edge_excess_bound;  // e - 3n + 6 (0 when n < 3)
    Rational cubic_bound;      // c e^3 / n^2
    Rational required;         // min of the two
    std::string binding;       // "edge_excess" or "cubic", whichever is the minimum
    bool satisfied = false;    // crossings >= required
    std::vector<ChainCheck> chain;         // dense route only
    std::vector<std::string> contradictions;
};

CrossingAudit crossing_audit(const Drawing& d, const Constants& k = {});

}  // namespace branching
