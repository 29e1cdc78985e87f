#include "branching/generators.hpp"
#include "branching/validate.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

namespace branching {
namespace {

// Direct pattern search used as the reference for ds2_check.
bool ds2_brute(const std::vector<VertexId>& s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (s[i] == s[i + 1]) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s[i] == s[j]) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (s[k] != s[i]) continue;
                for (std::size_t l = k + 1; l < n; ++l)
                    if (s[l] == s[j]) return false;
            }
        }
    return true;
}

// Longest sequence over `symbols` symbols avoiding both patterns, by depth-first
// extension. Symbols are introduced in order of first use, which loses nothing.
std::size_t longest_ds2(int symbols) {
    std::vector<VertexId> seq;
    std::size_t best = 0;
    std::function<void(int)> grow = [&](int used) {
        best = std::max(best, seq.size());
        for (int x = 0; x < std::min(used + 1, symbols); ++x) {
            seq.push_back(x);
            if (ds2_brute(seq)) grow(std::max(used, x + 1));
            seq.pop_back();
        }
    };
    grow(0);
    return best;
}

TEST(Ds2, SmallExamples) {
    EXPECT_TRUE(ds2_check({1, 2, 1}));
    EXPECT_FALSE(ds2_check({1, 2, 1, 2}));
    EXPECT_FALSE(ds2_check({1, 1}));
    EXPECT_TRUE(ds2_check({}));
    EXPECT_TRUE(ds2_check({5}));
    EXPECT_FALSE(ds2_check({1, 2, 3, 1, 4, 2}));
    EXPECT_TRUE(ds2_check({1, 2, 3, 2, 4, 2, 1}));
}

TEST(Ds2, MaxLengthFormula) {
    EXPECT_EQ(ds2_max_length(1), 1);
    EXPECT_EQ(ds2_max_length(4), 7);
    EXPECT_THROW((void)ds2_max_length(0), std::invalid_argument);
}

TEST(Ds2, ExhaustiveEnumerationUpToSixSymbols) {
    for (int s = 1; s <= 6; ++s) EXPECT_EQ(static_cast<std::int64_t>(longest_ds2(s)), ds2_max_length(s)) << "s=" << s;
}

TEST(Ds2, AgreesWithBruteForceOnRandomSequences) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<VertexId> s(rng() % 12);
        const auto k = 1 + rng() % 5;
        for (auto& x : s) x = static_cast<VertexId>(rng() % k);
        EXPECT_EQ(ds2_check(s), ds2_brute(s));
    }
}

TEST(CheckBranching, TightConstructionsPass) {
    for (int n = 3; n <= 12; ++n) {
        const auto r = check_branching(gen_tight(n));
        EXPECT_TRUE(r.ok) << "n=" << n;
        EXPECT_TRUE(r.violations.empty());
    }
}

TEST(CheckBranching, BlowupOfTriangleHasEmptyLenses) {
    const auto b = gen_blowup(gen_tight(3), 2);
    EXPECT_FALSE(b.report.ok);
    EXPECT_EQ(b.report.count(ViolationKind::EmptyLens), 3u);
    for (const auto& v : b.report.violations) {
        EXPECT_EQ(v.kind, ViolationKind::EmptyLens);
        EXPECT_EQ(v.edges[0] / 2, v.edges[1] / 2);
    }
    EXPECT_EQ(empty_lenses(b.drawing).size(), 3u);
}

TEST(CheckBranching, TripartiteHasDoubleCrossings) {
    const auto r = check_branching(gen_tripartite(6));
    EXPECT_FALSE(r.ok);
    EXPECT_GT(r.count(ViolationKind::DoubleCross), 0u);
    for (const auto& v : r.violations)
        if (v.kind == ViolationKind::DoubleCross) EXPECT_EQ(v.crossings.size(), 2u);
}

TEST(CheckBranching, AdjacentEdgesCrossing) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {10, 0}}, {2, {10, 10}}};
    g.edges = {{0, 0, 1, {}}, {1, 0, 2, {{5, -5}, {6, 5}}}};
    const auto r = check_branching(import_geometric(g));
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0].kind, ViolationKind::AdjacentCross);
    EXPECT_EQ(r.violations[0].edges, (std::vector<EdgeId>{0, 1}));
    EXPECT_EQ(to_string(ViolationKind::TriplePoint), "triple-point");
}

TEST(CheckBranching, DeletionNeverCreatesViolations) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const Drawing d = gen_random_branching(n, 0.7, rng());
        ASSERT_TRUE(check_branching(d).ok);
        std::vector<EdgeId> drop;
        for (const Edge& e : d.edges())
            if (rng() % 3 == 0) drop.push_back(e.id);
        EXPECT_TRUE(check_branching(delete_edges(d, drop)).ok);
    }
    // Deleting from a non-branching drawing only removes violations.
    const Drawing t = gen_tripartite(6);
    const auto before = check_branching(t);
    std::vector<EdgeId> drop{0, 1, 2};
    const auto after = check_branching(delete_edges(t, drop));
    EXPECT_LE(after.count(ViolationKind::DoubleCross), before.count(ViolationKind::DoubleCross));
    EXPECT_LE(after.count(ViolationKind::AdjacentCross), before.count(ViolationKind::AdjacentCross));
}

TEST(StarSequence, TightFiveEveryVertex) {
    const Drawing d = gen_tight(5);
    for (VertexId v = 0; v < 5; ++v) {
        const auto s = star_sequence(d, v);
        EXPECT_EQ(s.extended.size(), 7u);
        EXPECT_EQ(s.augmented, 0);
        EXPECT_TRUE(ds2_check(s.extended));
        EXPECT_EQ(s.extended.back(), s.symbols.front());
    }
}

TEST(StarSequence, PlaneStarInRotationOrder) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {5, 0}}, {2, {0, 5}}, {3, {-5, 0}}, {4, {0, -5}}};
    g.edges = {{0, 0, 1, {}}, {1, 0, 3, {}}, {2, 0, 2, {}}, {3, 0, 4, {}}};
    const auto s = star_sequence(import_geometric(g), 0);
    EXPECT_EQ(s.symbols, (std::vector<VertexId>{1, 2, 3, 4}));
}

TEST(StarSequence, IsolatedCenterIsAugmented) {
    GeometricDrawing g;
    g.vertices = {{0, {0, 0}}, {1, {5, 0}}};
    const auto s = star_sequence(import_geometric(g), 0);
    EXPECT_EQ(s.symbols, std::vector<VertexId>{1});
    EXPECT_EQ(s.augmented, 1);
    EXPECT_TRUE(ds2_check(s.extended) == false);  // [1, 1]: a single symbol wraps onto itself
}

TEST(StarSequence, PropertiesOnRandomBranchingDrawings) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        const Drawing d = gen_random_branching(n, 0.3 + 0.7 * static_cast<double>(rng() % 100) / 100.0, rng());
        for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
            const auto s = star_sequence(d, d.vertex_id(v));
            EXPECT_GE(static_cast<std::int64_t>(s.symbols.size()), d.degree(v) + s.augmented);
            if (n >= 3) {
                EXPECT_TRUE(ds2_check(s.extended)) << "n=" << n << " v=" << v;
                EXPECT_LE(static_cast<std::int64_t>(s.extended.size()), 2 * n - 3);
            }
        }
    }
}

}  // namespace
}  // namespace branching
