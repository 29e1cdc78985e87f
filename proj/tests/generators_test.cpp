#include "branching/generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace branching {
namespace {

std::string import_error(const GeometricDrawing& g) {
    try {
        (void)import_geometric(g);
    } catch (const DrawingError& e) {
        return e.what();
    }
    return "";
}

TEST(GenTight, CountsAndDegrees) {
    for (int n = 3; n <= 14; ++n) {
        const Drawing d = gen_tight(n);
        EXPECT_EQ(d.vertex_count(), n);
        EXPECT_EQ(d.edge_count(), n * (n - 2));
        for (VertexIndex v = 0; v < n; ++v) EXPECT_EQ(d.degree(v), 2 * n - 4);
        EXPECT_EQ(d.crossing_count(), 2 * oracle::interleaving_quadruples(n)) << "n=" << n;
        EXPECT_LE(d.max_multiplicity(), 2);
    }
    EXPECT_EQ(gen_tight(5).edge_count(), 15);
    EXPECT_EQ(gen_tight(5).crossing_count(), 10);
    EXPECT_EQ(gen_tight(3).crossing_count(), 0);
    EXPECT_THROW((void)gen_tight(2), std::invalid_argument);
}

TEST(GenRandom, ExtremeKeepProbabilities) {
    EXPECT_TRUE(isomorphic(gen_random_branching(7, 1.0, 3), gen_tight(7)));
    const Drawing none = gen_random_branching(7, 0.0, 3);
    EXPECT_EQ(none.vertex_count(), 7);
    EXPECT_EQ(none.edge_count(), 0);
}

TEST(GenRandom, DeterministicAndBranching) {
    const Drawing a = gen_random_branching(9, 0.5, 42);
    const Drawing b = gen_random_branching(9, 0.5, 42);
    EXPECT_TRUE(isomorphic(a, b));
    EXPECT_TRUE(check_branching(a).ok);
    const Drawing c = gen_random_branching(9, 0.5, 43);
    EXPECT_FALSE(isomorphic(a, c));
}

TEST(GenBlowup, IdentityForMultiplicityOne) {
    const Drawing d = gen_tight(6);
    std::vector<EdgeId> south;
    for (EdgeId id = 7; id < d.edge_count(); id += 2) south.push_back(id);
    const Drawing simple = delete_edges(d, south);
    ASSERT_EQ(simple.max_multiplicity(), 1);
    EXPECT_TRUE(isomorphic(gen_blowup(simple, 1).drawing, simple));
}

TEST(GenBlowup, SingleCrossingBecomesFour) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {10, 0}}, {2, {10, 10}}, {3, {0, 10}}};
    g.edges = {{0, 0, 2, {}}, {1, 1, 3, {}}};
    const auto b = gen_blowup(import_geometric(g), 2);
    EXPECT_EQ(b.drawing.crossing_count(), 4);
    EXPECT_EQ(b.drawing.edge_count(), 4);
}

TEST(GenBlowup, PlaneK4TimesThree) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {10, 0}}, {2, {5, 10}}, {3, {5, 3}}};
    g.edges = {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 0, {}}, {3, 0, 3, {}}, {4, 1, 3, {}}, {5, 2, 3, {}}};
    const auto b = gen_blowup(import_geometric(g), 3);
    EXPECT_EQ(b.drawing.crossing_count(), 0);
    EXPECT_EQ(b.drawing.edge_count(), 18);
    EXPECT_FALSE(b.report.ok);
}

TEST(GenBlowup, MultipliesCrossingsBySquare) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Drawing base = import_geometric(random_straight_line(9, 0.45, seed));
        for (int m : {1, 2, 3, 5}) {
            const auto b = gen_blowup(base, m);
            EXPECT_EQ(b.drawing.crossing_count(), m * m * base.crossing_count());
            EXPECT_EQ(b.drawing.edge_count(), m * base.edge_count());
            EXPECT_EQ(b.drawing.map().euler_violation(), kNone);
        }
    }
}

TEST(GenBlowup, RejectsBadInput) {
    const Drawing k3 = gen_tight(3);
    EXPECT_THROW((void)gen_blowup(k3, 0), std::invalid_argument);
    EXPECT_THROW((void)gen_blowup(gen_tight(5), 2), std::invalid_argument);
}

TEST(GenTripartite, SizesAndCrossings) {
    for (int n : {6, 9}) {
        const Drawing d = gen_tripartite(n);
        const int e = (n / 3) * (n / 3) * (n / 3);
        EXPECT_EQ(d.edge_count(), e);
        EXPECT_LE(d.crossing_count(), e * (e - 1));
        const auto r = check_branching(d);
        EXPECT_FALSE(r.ok);
        EXPECT_GT(r.count(ViolationKind::DoubleCross), 0u);
    }
    EXPECT_THROW((void)gen_tripartite(5), std::invalid_argument);
    EXPECT_THROW((void)gen_tripartite(3), std::invalid_argument);
}

TEST(GenTripartite, EveryIndependentPairCrossesAtMostTwice) {
    const Drawing d = gen_tripartite(9);
    std::map<std::pair<EdgeIndex, EdgeIndex>, int> shared;
    for (NodeIndex x = d.vertex_count(); x < d.map().node_count(); ++x) {
        auto [e, f] = d.crossing_edges(x);
        ++shared[{std::min(e, f), std::max(e, f)}];
    }
    for (const auto& [pair, count] : shared) EXPECT_LE(count, 2);
    // Parallel copies never cross.
    for (const auto& [pair, count] : shared) {
        const Edge& a = d.edge(pair.first);
        const Edge& b = d.edge(pair.second);
        EXPECT_FALSE(a.u == b.u && a.v == b.v);
    }
}

TEST(ImportGeometric, SquareDiagonals) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {4, 0}}, {2, {4, 4}}, {3, {0, 4}}};
    g.edges = {{0, 0, 2, {}}, {1, 1, 3, {}}, {2, 0, 1, {}}, {3, 1, 2, {}}, {4, 2, 3, {}}, {5, 3, 0, {}}};
    const Drawing d = import_geometric(g);
    EXPECT_EQ(d.crossing_count(), 1);
    EXPECT_EQ(d.map().face_count(), 5);
}

TEST(ImportGeometric, PlaneK4WithInnerVertex) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {10, 0}}, {2, {5, 10}}, {3, {5, 3}}};
    g.edges = {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 0, {}}, {3, 0, 3, {}}, {4, 1, 3, {}}, {5, 2, 3, {}}};
    const Drawing d = import_geometric(g);
    EXPECT_EQ(d.crossing_count(), 0);
    EXPECT_EQ(d.map().euler_violation(), kNone);
    EXPECT_EQ(oracle::face_orbits(describe(d)).size(), 4u);
    // The outer face is the triangle 0-1-2 seen from outside: size 3, no dart towards 3.
    const auto outer = *d.outer_dart();
    EXPECT_EQ(d.map().face_size(d.map().face(outer)), 3);
}

TEST(ImportGeometric, RejectsDegenerateInput) {
    GeometricDrawing tri;
    tri.vertices = {{0, {0, 0}}, {1, {4, 4}}, {2, {4, 0}}, {3, {0, 4}}, {4, {2, 0}}, {5, {2, 4}}};
    tri.edges = {{0, 0, 1, {}}, {1, 2, 3, {}}, {2, 4, 5, {}}};
    EXPECT_NE(import_error(tri).find("three segments"), std::string::npos) << import_error(tri);

    GeometricDrawing overlap;
    overlap.vertices = {{0, {0, 0}}, {1, {4, 0}}, {2, {2, 5}}};
    overlap.edges = {{0, 0, 1, {}}, {1, 0, 2, {{2, 0}}}};
    EXPECT_NE(import_error(overlap).find("overlapping"), std::string::npos) << import_error(overlap);

    GeometricDrawing on_edge;
    on_edge.vertices = {{0, {0, 0}}, {1, {4, 0}}, {2, {2, 0}}};
    on_edge.edges = {{0, 0, 1, {}}};
    EXPECT_NE(import_error(on_edge).find("interior"), std::string::npos) << import_error(on_edge);

    GeometricDrawing touch;
    touch.vertices = {{0, {0, 0}}, {1, {4, 0}}, {2, {2, 3}}, {3, {6, 3}}};
    touch.edges = {{0, 0, 1, {}}, {1, 2, 3, {{2, 0}}}};
    EXPECT_NE(import_error(touch).find("touch"), std::string::npos) << import_error(touch);
}

TEST(ImportGeometric, NestedComponents) {
    // A triangle with a smaller triangle and an isolated vertex inside, and one
    // isolated vertex outside.
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {100, 0}}, {2, {50, 100}}, {3, {40, 10}}, {4, {60, 10}},
                  {5, {50, 30}}, {6, {50, 60}}, {7, {200, 200}}};
    g.edges = {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 0, {}}, {3, 3, 4, {}}, {4, 4, 5, {}}, {5, 5, 3, {}}};
    const Drawing d = import_geometric(g);
    const PlanarMap& m = d.map();
    ASSERT_EQ(m.component_count(), 4);
    const auto outer_comp = m.component(m.node(*d.outer_dart()));
    EXPECT_EQ(outer_comp, m.component(0));
    // Both inner pieces live in the bounded face of the big triangle.
    const FaceIndex inner = d.face_containing(m.component(0), m.component(3));
    EXPECT_EQ(d.face_containing(m.component(0), m.component(6)), inner);
    EXPECT_NE(d.face_containing(m.component(0), m.component(7)), inner);
    EXPECT_EQ(d.face_containing(m.component(0), m.component(7)), m.face(*d.outer_dart()));
    // The isolated vertex 6 is outside the small triangle.
    const FaceIndex small_outer = m.face(d.component_outer(m.component(3)));
    EXPECT_EQ(d.face_containing(m.component(3), m.component(6)), small_outer);
}

TEST(ImportGeometric, InvariantUnderTranslationAndRotation) {
    std::vector<GeometricDrawing> corpus{tripartite_geometry(6)};
    for (std::uint64_t s = 0; s < 5; ++s) corpus.push_back(random_straight_line(8, 0.5, s));
    GeometricDrawing nested;
    nested.vertices = {{0, {0, 0}}, {1, {100, 0}}, {2, {50, 100}}, {3, {40, 10}}, {4, {60, 10}}, {5, {50, 30}}};
    nested.edges = {{0, 0, 1, {}}, {1, 1, 2, {}}, {2, 2, 0, {}}, {3, 3, 4, {}}, {4, 4, 5, {}}, {5, 5, 3, {}}};
    corpus.push_back(nested);
    for (const auto& g : corpus) {
        const Drawing base = import_geometric(g);
        EXPECT_TRUE(isomorphic(import_geometric(translate(g, 17, -1234)), base));
        EXPECT_TRUE(isomorphic(import_geometric(rotate90(g)), base));
        EXPECT_TRUE(isomorphic(import_geometric(rotate90(rotate90(translate(g, -5, 9)))), base));
    }
}

TEST(RandomStraightLine, IsBranching) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Drawing d = import_geometric(random_straight_line(10, 0.4, s));
        EXPECT_TRUE(check_branching(d).ok);
        EXPECT_EQ(d.max_multiplicity() <= 1, true);
    }
}

}  // namespace
}  // namespace branching
