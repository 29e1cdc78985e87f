#include "branching/bisection.hpp"
#include "branching/generators.hpp"
#include "branching/geometric.hpp"
#include "branching/validate.hpp"

#include <gtest/gtest.h>

#include <set>

namespace branching {
namespace {

Drawing lens_with_inner_vertex() {
    // Edges 0 and 1 join u and v; w sits inside their lens and x outside.
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {4, 0}}, {2, {2, 1}}, {3, {2, -5}}};
    g.edges = {{0, 0, 1, {}}, {1, 0, 1, {{2, 3}}}};
    return import_geometric(g);
}

Drawing two_far_cliques() {
    GeometricDrawing g;
    const std::int64_t xs[2] = {0, 1000};
    std::int64_t id = 0;
    for (std::int64_t k = 0; k < 2; ++k) {
        const std::int64_t b = 4 * k;
        g.vertices.push_back({b, {xs[k], 0}});
        g.vertices.push_back({b + 1, {xs[k] + 4, 0}});
        g.vertices.push_back({b + 2, {xs[k] + 2, 4}});
        g.vertices.push_back({b + 3, {xs[k] + 2, 1}});
        for (std::int64_t a = 0; a < 4; ++a)
            for (std::int64_t c = a + 1; c < 4; ++c) g.edges.push_back({id++, b + a, b + c, {}});
    }
    return import_geometric(g);
}

TEST(Expand, TightFiveCounts) {
    const Drawing d = gen_tight(5);
    const GridExpansion x = expand(d);
    EXPECT_EQ(x.h.node_count(), 10 + 5 * 36);
    EXPECT_LE(x.h.node_count(), d.crossing_count() + degree_square_sum(d) + d.vertex_count());
    EXPECT_EQ(x.h.component_count(), 1);
    EXPECT_EQ(x.h.euler_violation(), kNone);
    Rational total = 0;
    for (const auto& w : x.weight) total += w;
    EXPECT_EQ(total, 5);
    for (VertexIndex v = 0; v < 5; ++v) {
        Rational wv = 0;
        for (NodeIndex p = 0; p < x.h.node_count(); ++p)
            if (x.origin[static_cast<std::size_t>(p)] == v) wv += x.weight[static_cast<std::size_t>(p)];
        EXPECT_EQ(wv, 1);
    }
    // Each special node receives exactly one drawing arc, at distinct nodes.
    std::set<NodeIndex> hooks;
    for (ArcIndex a = 0; a < x.drawing_arcs; ++a)
        for (DartIndex dart : {2 * a, 2 * a + 1}) {
            const NodeIndex p = x.h.node(dart);
            if (x.origin[static_cast<std::size_t>(p)] == kNone) continue;
            EXPECT_TRUE(x.is_special(p));
            EXPECT_TRUE(hooks.insert(p).second);
        }
    EXPECT_EQ(hooks.size(), 30u);
    std::int32_t crossings = 0;
    for (NodeIndex p = 0; p < x.h.node_count(); ++p) crossings += x.h.kind(p) == NodeKind::Crossing;
    EXPECT_EQ(crossings, d.crossing_count());
}

TEST(Expand, IsolatedAndDegreeOne) {
    DrawingSpec spec;
    spec.nodes = {NodeSpec{0, NodeKind::Real, {{0, 0, true}}}, NodeSpec{1, NodeKind::Real, {{0, 0, false}}},
                  NodeSpec{2, NodeKind::Real, {}}};
    spec.edges = {EdgeSpec{0, 0, 1}};
    const GridExpansion x = expand(build_drawing(spec));
    EXPECT_EQ(x.h.node_count(), 3);
    for (const auto& w : x.weight) EXPECT_EQ(w, 1);
    EXPECT_EQ(x.h.component_count(), 1);
}

TEST(Classify, UntouchedAndFullyCutGrids) {
    const Drawing d = gen_tight(5);
    const GridExpansion x = expand(d);
    SeparatorCycle s;
    for (std::int32_t j = 0; j < 6; ++j) s.cycle.push_back(x.special(0, j));
    std::set<NodeIndex> on(s.cycle.begin(), s.cycle.end());
    for (NodeIndex p = 0; p < x.h.node_count(); ++p)
        if (!on.contains(p)) s.inside.push_back(p);
    const GridClassification cls = classify(x, s);
    EXPECT_EQ(cls.grids[0].weight_class, WeightClass::C);
    EXPECT_EQ(cls.grids[0].on_cycle, 6);
    EXPECT_TRUE(cls.grids[0].type1);
    for (VertexIndex v = 1; v < 5; ++v) {
        EXPECT_EQ(cls.grids[static_cast<std::size_t>(v)].weight_class, WeightClass::A);
        EXPECT_EQ(cls.grids[static_cast<std::size_t>(v)].on_cycle, 0);
    }
}

TEST(Classify, SplitGridWithoutCutIsRejected) {
    const GridExpansion x = expand(gen_tight(5));
    SeparatorCycle s;
    for (NodeIndex p = 0; p < x.h.node_count(); ++p) {
        const bool first_half = x.origin[static_cast<std::size_t>(p)] == 0 && x.is_special(p) &&
                                p < x.special(0, 2);  // columns 0..2 of vertex 0's top row
        (first_half ? s.outside : s.inside).push_back(p);
    }
    try {
        (void)classify(x, s);
        FAIL() << "expected a classify error";
    } catch (const BisectionError& e) {
        EXPECT_EQ(e.stage(), "classify");
    }
}

GridClassification classes(std::initializer_list<WeightClass> list) {
    GridClassification cls;
    for (WeightClass c : list) {
        GridClass g;
        g.weight_class = c;
        cls.grids.push_back(g);
    }
    return cls;
}

TEST(Partition, Balancing) {
    using enum WeightClass;
    const Partition even = partition(classes({A, B, A, B}));
    EXPECT_EQ(even.part_a.size(), 2u);
    EXPECT_EQ(even.part_b.size(), 2u);
    const Partition all_c = partition(classes({C, C, C, C, C}));
    EXPECT_EQ(all_c.part_a, (std::vector<VertexIndex>{0, 2, 4}));
    EXPECT_EQ(all_c.part_b, (std::vector<VertexIndex>{1, 3}));
    const Partition mixed = partition(classes({A, A, A, C, C}));
    EXPECT_EQ(mixed.part_b, (std::vector<VertexIndex>{3, 4}));
    EXPECT_THROW((void)partition(classes({A, A, A, A, A})), BisectionError);
}

TEST(RepairLenses, IdentityWithoutParallelEdges) {
    const Drawing d = gen_tight(4);
    const Drawing simple = restrict_to_vertices(d, std::vector<VertexId>{0, 1, 2});
    const LensRepair r = repair_empty_lenses(simple);
    EXPECT_TRUE(r.deleted.empty() || d.max_multiplicity() > 1);
    EXPECT_TRUE(check_branching(r.drawing).ok);
}

TEST(RepairLenses, EmptiedDigonLosesSmallerEdge) {
    const Drawing d = lens_with_inner_vertex();
    ASSERT_TRUE(check_branching(d).ok);
    EXPECT_TRUE(repair_empty_lenses(d).deleted.empty());
    const Drawing part = restrict_to_vertices(d, std::vector<VertexId>{0, 1, 3});
    const LensRepair r = repair_empty_lenses(part);
    EXPECT_EQ(r.deleted, (std::vector<EdgeId>{0}));
    EXPECT_TRUE(check_branching(r.drawing).ok);
    EXPECT_EQ(r.drawing.edge_count(), 1);
}

void expect_valid(const Drawing& d, const BisectionResult& r) {
    const BisectionStats& s = r.stats;
    const std::int32_t n = d.vertex_count();
    EXPECT_GE(5 * r.part_a.vertex_count(), n);
    EXPECT_GE(5 * r.part_b.vertex_count(), n);
    EXPECT_EQ(r.part_a.vertex_count() + r.part_b.vertex_count(), n);
    EXPECT_TRUE(check_branching(r.part_a).ok);
    EXPECT_TRUE(check_branching(r.part_b).ok);
    // Every edge is kept in exactly one part or removed.
    std::set<EdgeId> seen;
    auto take = [&seen](EdgeId e) { EXPECT_TRUE(seen.insert(e).second) << e; };
    for (const Drawing* p : {&r.part_a, &r.part_b})
        for (const Edge& e : p->edges()) take(e.id);
    for (const auto* list : {&r.cut, &r.repaired_a, &r.repaired_b})
        for (EdgeId e : *list) take(e);
    EXPECT_EQ(static_cast<std::int32_t>(seen.size()), d.edge_count());
    // Cut edges are exactly those joining the parts.
    std::set<VertexId> a;
    for (VertexIndex v = 0; v < r.part_a.vertex_count(); ++v) a.insert(r.part_a.vertex_id(v));
    std::int32_t crossing = 0;
    for (const Edge& e : d.edges())
        crossing += a.contains(d.vertex_id(e.u)) != a.contains(d.vertex_id(e.v));
    EXPECT_EQ(crossing, s.cut_edges);
    EXPECT_EQ(s.cut_through_cycle + s.cut_minority, s.cut_edges);
    EXPECT_TRUE(s.separator_verified);
    EXPECT_TRUE(s.cut_bound_ok);
    EXPECT_TRUE(s.cycle_cut_ok);
    EXPECT_TRUE(s.repairs_ok);
}

TEST(Bisect, TightTen) {
    const Drawing d = gen_tight(10);
    const BisectionResult r = bisect(d);
    EXPECT_GE(r.part_a.vertex_count(), 2);
    EXPECT_GE(r.part_b.vertex_count(), 2);
    expect_valid(d, r);
    EXPECT_EQ(r.stats.measure, 420 + 10 * 16 * 16 + 10);
}

TEST(Bisect, RandomCorpus) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Drawing d = gen_random_branching(12 + static_cast<std::int32_t>(seed % 5), 0.6, seed);
        SCOPED_TRACE(seed);
        expect_valid(d, bisect(d));
    }
}

TEST(Bisect, FarApartCliques) {
    const Drawing d = two_far_cliques();
    ASSERT_TRUE(check_branching(d).ok);
    const BisectionResult r = bisect(d);
    expect_valid(d, r);
}

TEST(Bisect, Deterministic) {
    const Drawing d = gen_random_branching(14, 0.7, 99);
    const BisectionResult a = bisect(d);
    const BisectionResult b = bisect(d);
    EXPECT_EQ(a.cut, b.cut);
    EXPECT_EQ(a.repaired_a, b.repaired_a);
    EXPECT_TRUE(isomorphic(a.part_a, b.part_a));
    EXPECT_TRUE(isomorphic(a.part_b, b.part_b));
}

TEST(Bisect, SmallAndInvalidInputs) {
    DrawingSpec two;
    two.nodes = {NodeSpec{0, NodeKind::Real, {{0, 0, true}}}, NodeSpec{1, NodeKind::Real, {{0, 0, false}}}};
    two.edges = {EdgeSpec{0, 0, 1}};
    const Drawing d = build_drawing(two);
    const BisectionResult r = bisect(d);
    EXPECT_EQ(r.part_a.vertex_count(), 1);
    EXPECT_EQ(r.cut, (std::vector<EdgeId>{0}));

    DrawingSpec one;
    one.nodes = {NodeSpec{0, NodeKind::Real, {}}};
    EXPECT_THROW((void)bisect(build_drawing(one)), std::invalid_argument);
    try {
        (void)bisect(gen_tripartite(6));
        FAIL() << "expected an input error";
    } catch (const BisectionError& e) {
        EXPECT_EQ(e.stage(), "input");
    }
}

}  // namespace
}  // namespace branching
