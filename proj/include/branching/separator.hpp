#pragma once

#include "branching/drawing.hpp"
#include "branching/planar_map.hpp"
#include "branching/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace branching {

class SeparatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Connected plane map with a nonnegative weight per node. Scaffolding arcs
/// carry ArcLabel::edge == kNone.
struct WeightInput {
    PlanarMap map;
    std::vector<Rational> weight;
};

/// Simple cycle of map nodes; `inside` and `outside` are the node sets of the
/// two regions it bounds (which one is called inside is arbitrary).
struct SeparatorCycle {
    std::vector<NodeIndex> cycle;
    std::vector<NodeIndex> inside;
    std::vector<NodeIndex> outside;
    Rational w_inside;
    Rational w_outside;
    Rational w_cycle;
    Rational total;
    NodeIndex root = kNone;  // root of the spanning tree that produced the cycle
    std::int32_t roots_tried = 0;

    std::int32_t size() const { return static_cast<std::int32_t>(cycle.size()); }
};

/// Adds scaffolding arcs to `target` linking every nested component of d to
/// its host face. Darts of d.map() must be valid darts of `target` at the same
/// index; node_of maps each node of d.map() to its node in `target`. With no
/// arcs at all, the nodes are chained instead.
void link_components(PlanarMap& target, const Drawing& d, std::span<const NodeIndex> node_of);

/// Planarization of d joined into one component along the sphere nesting:
/// each nested component is linked to its host face by a scaffolding arc.
PlanarMap connected_map(const Drawing& d);

/// k x k grid, node r*k + c at (c, r); finalized.
PlanarMap grid_map(std::int32_t k);

/// Adds scaffolding arcs until every face of size >= 4 is a triangle (ear
/// cutting, avoiding loops always and parallel arcs when possible). Faces of
/// size 2 stay as they are. Throws std::invalid_argument on a disconnected map.
PlanarMap triangulate(const PlanarMap& map);

/// Balanced fundamental cycle of a BFS tree. Several roots are tried (weighted
/// median, approximate center, heaviest node); the search stops once a cycle
/// of size <= c_target * sqrt(node count) is found and otherwise returns the
/// shortest balanced cycle seen. Throws SeparatorError if no balanced cycle
/// exists for any root.
SeparatorCycle cycle_separator(const WeightInput& w, const Rational& c_target);

/// |cycle| <= c_sep * sqrt(nodes), exactly.
bool within_size_bound(std::int32_t cycle_size, std::int32_t nodes, const Rational& c_sep);

/// Independent re-check of every separator invariant. `failure` (optional)
/// receives the first violated condition.
bool verify_separator(const WeightInput& w, const SeparatorCycle& s, const Rational& c_sep,
                      std::string* failure = nullptr);

}  // namespace branching
