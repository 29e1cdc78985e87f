#pragma once

// Reference computations used only by the tests. They work from the textual
// description of a drawing (describe) rather than from the library's own map
// so that face, lens and component results are cross-checked independently.

#include "branching/drawing.hpp"

#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using branching::DartRef;
using branching::DrawingSpec;

inline std::tuple<long, int, bool> key(const DartRef& d) { return {d.edge, d.segment, d.forward}; }

struct DartTable {
    std::map<std::tuple<long, int, bool>, std::pair<std::size_t, std::size_t>> where;  // node, slot
    const DrawingSpec* spec = nullptr;

    explicit DartTable(const DrawingSpec& s) : spec(&s) {
        for (std::size_t n = 0; n < s.nodes.size(); ++n)
            for (std::size_t i = 0; i < s.nodes[n].rotation.size(); ++i) where[key(s.nodes[n].rotation[i])] = {n, i};
    }
    DartRef twin(const DartRef& d) const { return DartRef{d.edge, d.segment, !d.forward}; }
    DartRef rot_next(const DartRef& d) const {
        const auto [n, i] = where.at(key(d));
        const auto& rot = spec->nodes[n].rotation;
        return rot[(i + 1) % rot.size()];
    }
    // Reverse the dart, then step to the rotation successor.
    DartRef face_next(const DartRef& d) const { return rot_next(twin(d)); }
};

/// Face orbits as lists of darts.
inline std::vector<std::vector<DartRef>> face_orbits(const DrawingSpec& s) {
    DartTable t(s);
    std::set<std::tuple<long, int, bool>> seen;
    std::vector<std::vector<DartRef>> out;
    for (const auto& node : s.nodes)
        for (const DartRef& d : node.rotation) {
            if (seen.count(key(d))) continue;
            std::vector<DartRef> orbit;
            DartRef x = d;
            while (!seen.count(key(x))) {
                seen.insert(key(x));
                orbit.push_back(x);
                x = t.face_next(x);
            }
            out.push_back(orbit);
        }
    return out;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
    int count() {
        int c = 0;
        for (std::size_t i = 0; i < p.size(); ++i) c += find(static_cast<int>(i)) == static_cast<int>(i);
        return c;
    }
};

/// Vertices (ids, excluding the shared endpoints) on each side of the closed
/// curve e + f, found by merging faces across every arc not on the curve.
/// Only meaningful for drawings whose map is connected.
inline std::vector<std::set<long>> lens_regions(const DrawingSpec& s, long e, long f) {
    const auto faces = face_orbits(s);
    std::map<std::tuple<long, int, bool>, int> face_of;
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (const DartRef& d : faces[i]) face_of[key(d)] = static_cast<int>(i);
    UnionFind uf(faces.size());
    for (const auto& [k, fi] : face_of) {
        const long edge = std::get<0>(k);
        if (edge == e || edge == f) continue;
        uf.unite(fi, face_of.at({edge, std::get<1>(k), !std::get<2>(k)}));
    }
    std::map<long, long> endpoint_u, endpoint_v;
    for (const auto& es : s.edges) endpoint_u[es.id] = es.u, endpoint_v[es.id] = es.v;
    std::map<int, std::set<long>> regions;
    for (const auto& face : faces) regions[uf.find(face_of.at(key(face.front())))];
    for (const auto& node : s.nodes) {
        if (node.kind != branching::NodeKind::Real) continue;
        if (node.id == endpoint_u[e] || node.id == endpoint_v[e]) continue;
        regions[uf.find(face_of.at(key(node.rotation.front())))].insert(node.id);
    }
    std::vector<std::set<long>> out;
    for (auto& [r, vs] : regions) out.push_back(vs);
    return out;
}

/// Number of 4-subsets {i < a < j < b} of an n-cycle whose diagonals (i, j)
/// and (a, b) are both nonconsecutive pairs.
inline long interleaving_quadruples(int n) {
    auto nonconsecutive = [&](int x, int y) { return y - x >= 2 && !(x == 0 && y == n - 1); };
    long count = 0;
    for (int i = 0; i < n; ++i)
        for (int a = i + 1; a < n; ++a)
            for (int j = a + 1; j < n; ++j)
                for (int b = j + 1; b < n; ++b) count += nonconsecutive(i, j) && nonconsecutive(a, b);
    return count;
}

}  // namespace oracle
