#include "branching/bisection.hpp"

#include "branching/validate.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace branching {

NodeIndex GridExpansion::special(VertexIndex v, std::int32_t j) const {
    const std::int32_t s = grid_side[static_cast<std::size_t>(v)];
    return grid_start[static_cast<std::size_t>(v)] + (s - 1) * s + (s - 1 - j);
}

bool GridExpansion::is_special(NodeIndex x) const {
    const VertexIndex v = origin[static_cast<std::size_t>(x)];
    if (v == kNone) return false;
    const std::int32_t s = grid_side[static_cast<std::size_t>(v)];
    return s == 0 || x - grid_start[static_cast<std::size_t>(v)] >= (s - 1) * s;
}

GridExpansion expand(const Drawing& d) {
    const PlanarMap& m = d.map();
    const std::int32_t n = d.vertex_count();
    GridExpansion x;
    x.grid_start.resize(static_cast<std::size_t>(n));
    x.grid_side.resize(static_cast<std::size_t>(n));
    NodeIndex count = 0;
    for (VertexIndex v = 0; v < n; ++v) {
        const std::int32_t s = m.degree(v);
        x.grid_start[static_cast<std::size_t>(v)] = count;
        x.grid_side[static_cast<std::size_t>(v)] = s;
        count += s == 0 ? 1 : s * s;
        for (NodeIndex i = x.grid_start[static_cast<std::size_t>(v)]; i < count; ++i) {
            x.h.add_node(NodeKind::Real);
            x.origin.push_back(v);
            const bool special = s == 0 || i - x.grid_start[static_cast<std::size_t>(v)] >= (s - 1) * s;
            x.weight.push_back(!special ? Rational(0) : s == 0 ? Rational(1) : make_rational(1, s));
        }
    }
    // node_of: map node -> H node receiving its darts (special nodes for vertices).
    std::vector<NodeIndex> node_of(static_cast<std::size_t>(m.node_count()));
    for (VertexIndex v = 0; v < n; ++v) node_of[static_cast<std::size_t>(v)] = x.grid_start[static_cast<std::size_t>(v)];
    for (NodeIndex c = n; c < m.node_count(); ++c) {
        node_of[static_cast<std::size_t>(c)] = x.h.add_node(NodeKind::Crossing);
        x.origin.push_back(kNone);
        x.weight.emplace_back(0);
    }

    std::vector<std::int32_t> position(static_cast<std::size_t>(m.dart_count()), 0);
    for (VertexIndex v = 0; v < n; ++v) {
        std::int32_t j = 0;
        for (DartIndex dart : m.rotation(v)) position[static_cast<std::size_t>(dart)] = j++;
    }
    auto attach = [&](DartIndex dart) {
        const NodeIndex u = m.node(dart);
        if (u >= n) return node_of[static_cast<std::size_t>(u)];
        return x.special(u, position[static_cast<std::size_t>(dart)]);
    };
    for (ArcIndex a = 0; a < m.arc_count(); ++a) x.h.add_arc(attach(2 * a), attach(2 * a + 1), m.label(a));
    x.drawing_arcs = m.arc_count();

    // Grid rotations, counterclockwise: east, north (the hook on the top row), west, south.
    std::vector<std::array<DartIndex, 4>> rot(static_cast<std::size_t>(x.h.node_count()), {kNone, kNone, kNone, kNone});
    for (VertexIndex v = 0; v < n; ++v) {
        const std::int32_t s = x.grid_side[static_cast<std::size_t>(v)];
        const NodeIndex base = x.grid_start[static_cast<std::size_t>(v)];
        for (std::int32_t r = 0; r < s; ++r)
            for (std::int32_t c = 0; c < s; ++c) {
                const NodeIndex p = base + r * s + c;
                if (c + 1 < s) {
                    const ArcIndex a = x.h.add_arc(p, p + 1, ArcLabel{});
                    rot[static_cast<std::size_t>(p)][0] = 2 * a;
                    rot[static_cast<std::size_t>(p) + 1][2] = 2 * a + 1;
                }
                if (r + 1 < s) {
                    const ArcIndex a = x.h.add_arc(p, p + s, ArcLabel{});
                    rot[static_cast<std::size_t>(p)][1] = 2 * a;
                    rot[static_cast<std::size_t>(p + s)][3] = 2 * a + 1;
                }
            }
        std::int32_t j = 0;
        for (DartIndex dart : m.rotation(v)) rot[static_cast<std::size_t>(x.special(v, j++))][1] = dart;
    }
    for (VertexIndex v = 0; v < n; ++v) {
        const std::int32_t s = x.grid_side[static_cast<std::size_t>(v)];
        const NodeIndex base = x.grid_start[static_cast<std::size_t>(v)];
        for (NodeIndex p = base; p < base + s * s; ++p)
            for (DartIndex dart : rot[static_cast<std::size_t>(p)])
                if (dart != kNone) x.h.append_rotation(dart);
    }
    for (NodeIndex c = n; c < m.node_count(); ++c)
        for (DartIndex dart : m.rotation(c)) x.h.append_rotation(dart);

    link_components(x.h, d, node_of);
    x.h.finalize();
    return x;
}

GridClassification classify(const GridExpansion& x, const SeparatorCycle& s, const Constants& k) {
    enum : char { kInside, kOutside, kCycle };
    std::vector<char> role(static_cast<std::size_t>(x.h.node_count()), kOutside);
    for (NodeIndex v : s.inside) role[static_cast<std::size_t>(v)] = kInside;
    for (NodeIndex v : s.cycle) role[static_cast<std::size_t>(v)] = kCycle;

    GridClassification cls;
    cls.grids.resize(x.grid_side.size());
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.grid_side.size()); ++v) {
        GridClass& g = cls.grids[static_cast<std::size_t>(v)];
        const std::int32_t side = x.grid_side[static_cast<std::size_t>(v)];
        const NodeIndex base = x.grid_start[static_cast<std::size_t>(v)];
        const std::int32_t nodes = side == 0 ? 1 : side * side;
        std::int32_t special_in = 0, special_out = 0;
        for (NodeIndex p = base; p < base + nodes; ++p) {
            const char r = role[static_cast<std::size_t>(p)];
            (r == kInside ? g.inside : r == kOutside ? g.outside : g.on_cycle) += 1;
            if (x.is_special(p)) {
                if (r == kInside) ++special_in;
                if (r == kOutside) ++special_out;
            }
        }
        const std::int32_t d = std::max(side, 1);
        g.w_inside = make_rational(special_in, d);
        g.w_outside = make_rational(special_out, d);
        g.weight_class = g.w_inside >= k.class_threshold    ? WeightClass::A
                         : g.w_outside >= k.class_threshold ? WeightClass::B
                                                            : WeightClass::C;
        const Rational cut = make_rational(g.on_cycle);
        g.type1 = cut >= k.type_threshold * d;
        const Rational need = g.weight_class == WeightClass::C ? k.type_threshold * d
                                                               : Rational(std::min(g.w_inside, g.w_outside) * d);
        if (cut < need)
            throw BisectionError("classify", "grid of vertex index " + std::to_string(v) + " meets the cycle in " +
                                                 std::to_string(g.on_cycle) + " nodes, fewer than " +
                                                 to_fraction_string(need));
    }
    return cls;
}

Partition partition(const GridClassification& cls, const Constants& k) {
    Partition p;
    std::vector<VertexIndex> free;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(cls.grids.size()); ++v) {
        switch (cls.grids[static_cast<std::size_t>(v)].weight_class) {
            case WeightClass::A: p.part_a.push_back(v); break;
            case WeightClass::B: p.part_b.push_back(v); break;
            case WeightClass::C: free.push_back(v); break;
        }
    }
    for (VertexIndex v : free) (p.part_a.size() <= p.part_b.size() ? p.part_a : p.part_b).push_back(v);
    std::sort(p.part_a.begin(), p.part_a.end());
    std::sort(p.part_b.begin(), p.part_b.end());
    const auto n = static_cast<std::int64_t>(cls.grids.size());
    const Rational low = k.part_fraction * n;
    const Rational high = (1 - k.part_fraction) * n;
    for (const auto* part : {&p.part_a, &p.part_b}) {
        const auto size = make_rational(static_cast<std::int64_t>(part->size()));
        if (size < low || size > high)
            throw BisectionError("partition", "part of size " + std::to_string(part->size()) + " outside [" +
                                                  to_fraction_string(low) + ", " + to_fraction_string(high) + "]");
    }
    return p;
}

LensRepair repair_empty_lenses(const Drawing& part) {
    std::set<EdgeId> doomed;
    for (const Violation& v : empty_lenses(part)) doomed.insert(std::min(v.edges[0], v.edges[1]));
    LensRepair r;
    r.deleted.assign(doomed.begin(), doomed.end());
    r.drawing = r.deleted.empty() ? part : delete_edges(part, r.deleted);
    return r;
}

BisectionResult bisect(const Drawing& d, const Constants& k) {
    const std::int32_t n = d.vertex_count();
    if (n < 2) throw std::invalid_argument("bisection needs at least two vertices");
    if (!check_branching(d).ok) throw BisectionError("input", "drawing is not branching");

    BisectionResult out;
    BisectionStats& st = out.stats;
    st.n = n;
    st.crossings = d.crossing_count();
    st.degree_square_sum = degree_square_sum(d);
    st.measure = st.crossings + st.degree_square_sum + st.n;

    const GridExpansion x = expand(d);
    st.h_nodes = x.h.node_count();
    GridClassification cls;
    std::vector<char> on_cycle(static_cast<std::size_t>(x.h.node_count()), 0);
    std::vector<char> inside(static_cast<std::size_t>(x.h.node_count()), 0);
    if (x.h.node_count() >= 4) {
        const WeightInput w{triangulate(x.h), x.weight};
        SeparatorCycle s;
        try {
            s = cycle_separator(w, k.c_sep_target);
        } catch (const std::exception& e) {
            throw BisectionError("separator", e.what());
        }
        std::string why;
        st.separator_used = true;
        st.separator_verified = verify_separator(w, s, k.c_sep, &why);
        if (!st.separator_verified && within_size_bound(s.size(), w.map.node_count(), k.c_sep))
            throw BisectionError("separator", why);
        st.separator_within_target = within_size_bound(s.size(), w.map.node_count(), k.c_sep_target);
        st.separator_size = s.size();
        st.separator_w_inside = s.w_inside;
        st.separator_w_outside = s.w_outside;
        st.separator_w_cycle = s.w_cycle;
        for (NodeIndex v : s.cycle) on_cycle[static_cast<std::size_t>(v)] = 1;
        for (NodeIndex v : s.inside) inside[static_cast<std::size_t>(v)] = 1;
        cls = classify(x, s, k);
    } else {
        cls.grids.assign(static_cast<std::size_t>(n), GridClass{});
    }
    for (const GridClass& g : cls.grids) {
        ++(g.weight_class == WeightClass::A ? st.class_a : g.weight_class == WeightClass::B ? st.class_b : st.class_c);
        if (g.type1) ++st.type1;
    }
    const Partition p = partition(cls, k);
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (VertexIndex v : p.part_a) in_a[static_cast<std::size_t>(v)] = 1;

    for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
        const Edge& edge = d.edge(e);
        if (in_a[static_cast<std::size_t>(edge.u)] == in_a[static_cast<std::size_t>(edge.v)]) continue;
        out.cut.push_back(edge.id);
        if (!st.separator_used) continue;
        bool touches = false;
        for (ArcIndex a : d.edge_arcs(e))
            touches = touches || on_cycle[static_cast<std::size_t>(x.h.node(2 * a))] ||
                      on_cycle[static_cast<std::size_t>(x.h.node(2 * a + 1))];
        if (touches) {
            ++st.cut_through_cycle;
            continue;
        }
        // The path avoids the cycle, so one end must leave its grid on the side
        // opposite to its part (part A is the inside).
        const auto arcs = d.edge_arcs(e);
        const NodeIndex hu = x.h.node(2 * arcs.front());
        const NodeIndex hv = x.h.node(2 * arcs.back() + 1);
        const bool far_u = inside[static_cast<std::size_t>(hu)] != in_a[static_cast<std::size_t>(edge.u)];
        const bool far_v = inside[static_cast<std::size_t>(hv)] != in_a[static_cast<std::size_t>(edge.v)];
        if (!far_u && !far_v)
            throw BisectionError("accounting", "cut edge " + std::to_string(edge.id) + " is not covered");
        ++st.cut_minority;
    }
    st.cut_edges = static_cast<std::int32_t>(out.cut.size());

    auto ids = [&d](const std::vector<VertexIndex>& part) {
        std::vector<VertexId> r;
        for (VertexIndex v : part) r.push_back(d.vertex_id(v));
        return r;
    };
    LensRepair ra = repair_empty_lenses(restrict_to_vertices(d, ids(p.part_a)));
    LensRepair rb = repair_empty_lenses(restrict_to_vertices(d, ids(p.part_b)));
    for (const Drawing* part : {&ra.drawing, &rb.drawing})
        if (!check_branching(*part).ok) throw BisectionError("repair", "a part is not branching after lens repair");
    out.part_a = std::move(ra.drawing);
    out.part_b = std::move(rb.drawing);
    out.repaired_a = std::move(ra.deleted);
    out.repaired_b = std::move(rb.deleted);
    st.repairs_a = static_cast<std::int32_t>(out.repaired_a.size());
    st.repairs_b = static_cast<std::int32_t>(out.repaired_b.size());

    st.bound_scale = std::max(Rational(1), Rational(k.c_sep / 3));
    const Rational measure = make_rational(st.measure);
    st.cut_bound_ok = le_scaled_sqrt(make_rational(st.removed()), k.bisection_factor * st.bound_scale, measure);
    st.cycle_cut_ok = le_scaled_sqrt(make_rational(st.cut_edges), k.cycle_cut_factor * st.bound_scale, measure);
    const Rational c = make_rational(st.crossings);
    st.repairs_ok = le_scaled_sqrt(make_rational(st.repairs_a), 2, c) && le_scaled_sqrt(make_rational(st.repairs_b), 2, c);
    return out;
}

}  // namespace branching
