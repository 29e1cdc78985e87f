#pragma once

#include "branching/drawing.hpp"
#include "branching/geometric.hpp"
#include "branching/validate.hpp"

#include <cstdint>

namespace branching {

/// Extremal branching drawing with n(n-2) edges: an equatorial n-cycle plus,
/// for every nonconsecutive pair, one chord in each hemisphere.
/// Edge ids: equator edge (p, p+1 mod n) is p; chords follow in lexicographic
/// pair order, north before south.
Drawing gen_tight(std::int32_t n);

/// Keeps each edge of gen_tight(n), in id order, with probability `keep`.
/// The stream is std::mt19937_64(seed); an edge survives when
/// (draw >> 11) * 2^-53 < keep.
Drawing gen_random_branching(std::int32_t n, double keep, std::uint64_t seed);

struct BlowupResult {
    Drawing drawing;
    BranchingReport report;
};

/// Replaces every edge by m parallel copies inside a thin ribbon. Copy k of
/// edge id x gets id x*m + k, copies numbered from the right of u -> v.
BlowupResult gen_blowup(const Drawing& d, std::int32_t m);

/// Three columns x = 1, 2, 3 of n/3 vertices; every left vertex is joined to
/// every right vertex once through each cyclic gap of the middle column.
GeometricDrawing tripartite_geometry(std::int32_t n);
Drawing gen_tripartite(std::int32_t n);

/// Random straight-line simple graph on points in general position; used as a
/// corpus of branching drawings with geometric origin.
GeometricDrawing random_straight_line(std::int32_t n, double edge_probability, std::uint64_t seed);

}  // namespace branching
