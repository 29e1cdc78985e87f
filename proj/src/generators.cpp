#include "branching/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace branching {

namespace {

struct Chord {
    std::int32_t i = 0;
    std::int32_t j = 0;
    EdgeId id = 0;
    std::int32_t span() const { return j - i; }
};

// One hemisphere of the tight construction, modelled by rectilinear arches over
// the equator. Vertex p sits at x = p*K. Chord (i, j) rises at x_dep, runs at
// height h and descends at x_arr; nested chords sit strictly inside each other.
struct ArchModel {
    std::int64_t n;
    std::int64_t K;
    explicit ArchModel(std::int64_t n_) : n(n_), K(4 * n_) {}
    std::int64_t height(const Chord& c) const { return c.span() * n + c.i; }
    std::int64_t x_dep(const Chord& c) const { return c.i * K + 1 + (n - c.span()); }
    std::int64_t x_arr(const Chord& c) const { return c.j * K - 1 - (n - c.span()); }
};

// Key of a point along an arch: left vertical upward, top leftward-to-right,
// right vertical downward.
using ArchKey = std::pair<int, std::int64_t>;

}  // namespace

Drawing gen_tight(std::int32_t n) {
    if (n < 3) throw std::invalid_argument("gen_tight: n must be at least 3");
    std::vector<Chord> chords;
    EdgeId next = n;
    for (std::int32_t i = 0; i < n; ++i)
        for (std::int32_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            chords.push_back(Chord{i, j, next});
            next += 2;
        }
    const ArchModel arch(n);

    DrawingSpec spec;
    for (std::int32_t p = 0; p < n; ++p) spec.edges.push_back(EdgeSpec{p, p, (p + 1) % n});
    for (const Chord& c : chords) {
        spec.edges.push_back(EdgeSpec{c.id, c.i, c.j});
        spec.edges.push_back(EdgeSpec{c.id + 1, c.i, c.j});
    }

    // Crossings, per hemisphere: for interleaving P = (i, j), Q = (a, b) with
    // i < a < j < b the arches meet exactly once.
    struct Cross {
        std::size_t p, q;
        bool north;
        std::int32_t pos_p = 0, pos_q = 0;
    };
    std::vector<Cross> crossings;
    // Two crossings per interleaving chord pair, one pair per 4-subset of the points.
    const auto quads = static_cast<std::size_t>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
    crossings.reserve(2 * quads);
    std::vector<std::vector<std::pair<ArchKey, std::size_t>>> along(chords.size());
    for (std::size_t p = 0; p < chords.size(); ++p) {
        for (std::size_t q = 0; q < chords.size(); ++q) {
            const Chord& P = chords[p];
            const Chord& Q = chords[q];
            if (!(P.i < Q.i && Q.i < P.j && P.j < Q.j)) continue;
            ArchKey on_p, on_q;
            if (arch.height(Q) > arch.height(P)) {
                on_p = {1, arch.x_dep(Q)};
                on_q = {0, arch.height(P)};
            } else {
                on_p = {2, -arch.height(Q)};
                on_q = {1, arch.x_arr(P)};
            }
            // The same arch picture serves both hemispheres.
            const std::size_t k = crossings.size();
            crossings.push_back(Cross{p, q, true});
            crossings.push_back(Cross{p, q, false});
            along[p].push_back({on_p, k});
            along[q].push_back({on_q, k});
        }
    }
    std::vector<std::int32_t> chord_crossings(chords.size());
    for (std::size_t c = 0; c < chords.size(); ++c) {
        auto& list = along[c];
        std::sort(list.begin(), list.end());
        chord_crossings[c] = static_cast<std::int32_t>(list.size());
        for (std::size_t t = 0; t < list.size(); ++t) {
            for (std::size_t k : {list[t].second, list[t].second + 1}) {
                Cross& x = crossings[k];
                (x.p == c ? x.pos_p : x.pos_q) = static_cast<std::int32_t>(t);
            }
        }
    }

    auto chord_id = [&](std::size_t c, bool north) { return chords[c].id + (north ? 0 : 1); };
    auto start_dart = [&](std::size_t c, bool north) { return DartRef{chord_id(c, north), 0, true}; };
    auto end_dart = [&](std::size_t c, bool north) { return DartRef{chord_id(c, north), chord_crossings[c], false}; };

    std::vector<std::vector<std::size_t>> right_of(static_cast<std::size_t>(n));
    std::vector<std::vector<std::size_t>> left_of(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < chords.size(); ++c) {
        right_of[static_cast<std::size_t>(chords[c].i)].push_back(c);
        left_of[static_cast<std::size_t>(chords[c].j)].push_back(c);
    }
    auto by_span = [&](std::vector<std::size_t> v, bool increasing) {
        std::sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) {
            return increasing ? chords[a].span() < chords[b].span() : chords[a].span() > chords[b].span();
        });
        return v;
    };
    spec.nodes.reserve(static_cast<std::size_t>(n) + crossings.size());
    for (std::int32_t p = 0; p < n; ++p) {
        NodeSpec node;
        node.id = p;
        node.kind = NodeKind::Real;
        auto& rot = node.rotation;
        rot.push_back(DartRef{p, 0, true});  // east along the equator
        for (std::size_t c : by_span(right_of[p], true)) rot.push_back(start_dart(c, true));
        for (std::size_t c : by_span(left_of[p], false)) rot.push_back(end_dart(c, true));
        rot.push_back(DartRef{(p + n - 1) % n, 0, false});  // west along the equator
        for (std::size_t c : by_span(left_of[p], true)) rot.push_back(end_dart(c, false));
        for (std::size_t c : by_span(right_of[p], false)) rot.push_back(start_dart(c, false));
        spec.nodes.push_back(std::move(node));
    }
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        const Cross& x = crossings[k];
        const EdgeId pe = chord_id(x.p, x.north);
        const EdgeId qe = chord_id(x.q, x.north);
        const DartRef p_fwd{pe, x.pos_p + 1, true}, p_back{pe, x.pos_p, false};
        const DartRef q_fwd{qe, x.pos_q + 1, true}, q_back{qe, x.pos_q, false};
        NodeSpec node;
        node.id = n + static_cast<std::int64_t>(k);
        node.kind = NodeKind::Crossing;
        // Q passes from the inside of P's arch to its left; the south side is mirrored.
        if (x.north)
            node.rotation = {p_fwd, q_fwd, p_back, q_back};
        else
            node.rotation = {p_fwd, q_back, p_back, q_fwd};
        spec.nodes.push_back(std::move(node));
    }
    spec.outer_face = DartRef{n - 1, 0, true};
    return build_drawing(spec);
}

Drawing gen_random_branching(std::int32_t n, double keep, std::uint64_t seed) {
    const Drawing full = gen_tight(n);
    std::mt19937_64 rng(seed);
    std::vector<EdgeId> dropped;
    for (const Edge& e : full.edges()) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (!(u < keep)) dropped.push_back(e.id);
    }
    return delete_edges(full, dropped);
}

BlowupResult gen_blowup(const Drawing& d, std::int32_t m) {
    if (m < 1) throw std::invalid_argument("gen_blowup: multiplicity must be at least 1");
    if (d.has_loops() || d.max_multiplicity() > 1) throw std::invalid_argument("gen_blowup: drawing must be simple");
    const DrawingSpec old = describe(d);
    auto copy_id = [&](EdgeId e, std::int32_t k) { return e * m + k; };

    DrawingSpec spec;
    spec.allow_loops = false;
    for (const EdgeSpec& e : old.edges)
        for (std::int32_t k = 0; k < m; ++k) spec.edges.push_back(EdgeSpec{copy_id(e.id, k), e.u, e.v});

    // A dart at a real vertex or on a face boundary lands on the sub-segment
    // between crossing blocks; the face to its left borders the leftmost copy
    // (forward) or the rightmost copy (backward).
    auto face_dart = [&](const DartRef& r) {
        return DartRef{copy_id(r.edge, r.forward ? m - 1 : 0), r.segment * m, r.forward};
    };

    std::int64_t next_node = 0;
    for (const NodeSpec& ns : old.nodes) next_node = std::max(next_node, ns.id + 1);
    for (const NodeSpec& ns : old.nodes) {
        if (ns.kind == NodeKind::Real) {
            NodeSpec node{ns.id, NodeKind::Real, {}};
            for (const DartRef& r : ns.rotation)
                for (std::int32_t t = 0; t < m; ++t) {
                    const std::int32_t k = r.forward ? t : m - 1 - t;
                    node.rotation.push_back(DartRef{copy_id(r.edge, k), r.segment * m, r.forward});
                }
            spec.nodes.push_back(std::move(node));
            continue;
        }
        // Crossing: find the outgoing dart of the first edge and the orientation.
        std::size_t s = 0;
        while (!ns.rotation[s].forward) ++s;
        const DartRef e_out = ns.rotation[s];
        const DartRef f_next = ns.rotation[(s + 1) % 4];
        const bool f_leftward = f_next.forward;  // [e_out, f_out, e_in, f_in]
        const EdgeId e = e_out.edge;
        const std::int32_t te = e_out.segment - 1;
        const std::int32_t tf = f_next.forward ? f_next.segment - 1 : f_next.segment;
        for (std::int32_t ke = 0; ke < m; ++ke) {
            for (std::int32_t kf = 0; kf < m; ++kf) {
                const std::int32_t je = f_leftward ? m - 1 - kf : kf;
                const std::int32_t jf = f_leftward ? ke : m - 1 - ke;
                const std::int32_t qe = te * m + je;
                const std::int32_t qf = tf * m + jf;
                NodeSpec node{next_node++, NodeKind::Crossing, {}};
                for (std::size_t i = 0; i < 4; ++i) {
                    const DartRef& r = ns.rotation[(s + i) % 4];
                    const bool on_e = r.edge == e;
                    const std::int32_t q = on_e ? qe : qf;
                    node.rotation.push_back(DartRef{copy_id(r.edge, on_e ? ke : kf), r.forward ? q + 1 : q, r.forward});
                }
                spec.nodes.push_back(std::move(node));
            }
        }
    }
    if (old.outer_face) spec.outer_face = face_dart(*old.outer_face);
    for (const PlacementSpec& p : old.placements) {
        PlacementSpec np{p.node, face_dart(p.host), std::nullopt};
        if (p.outer) np.outer = face_dart(*p.outer);
        spec.placements.push_back(np);
    }
    BlowupResult out{build_drawing(spec), {}};
    out.report = check_branching(out.drawing);
    return out;
}

}  // namespace branching

namespace branching {

namespace {

// Draws integer coordinates until the import accepts the layout; each attempt
// uses an independent stream derived from (seed, attempt).
template <typename Make>
GeometricDrawing first_valid(std::uint64_t seed, Make make) {
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (attempt + 1)));
        GeometricDrawing g = make(rng);
        try {
            (void)import_geometric(g);
            return g;
        } catch (const DrawingError&) {
        }
    }
    throw std::runtime_error("no general-position layout found");
}

}  // namespace

GeometricDrawing tripartite_geometry(std::int32_t n) {
    if (n % 3 != 0) throw std::invalid_argument("gen_tripartite: n must be a multiple of 3");
    if (n < 6) throw std::invalid_argument("gen_tripartite: n must be at least 6");
    const std::int64_t k = n / 3;
    constexpr std::int64_t gap = 1'000'000;
    return first_valid(0x7219a87dULL + static_cast<std::uint64_t>(n), [&](std::mt19937_64& rng) {
        std::uniform_int_distribution<std::int64_t> side(-gap, k * gap);
        GeometricDrawing g;
        for (std::int64_t a = 0; a < k; ++a) g.vertices.push_back(GeoVertex{a, {1, side(rng)}});
        for (std::int64_t b = 0; b < k; ++b) g.vertices.push_back(GeoVertex{k + b, {2, b * gap}});
        for (std::int64_t c = 0; c < k; ++c) g.vertices.push_back(GeoVertex{2 * k + c, {3, side(rng)}});
        // Distinct offsets inside each gap; gap k-1 is the cyclic one above the column.
        std::vector<std::int64_t> offsets(static_cast<std::size_t>(k * k));
        std::uniform_int_distribution<std::int64_t> off(1, gap - 1);
        for (std::int64_t gi = 0; gi < k; ++gi) {
            std::set<std::int64_t> used;
            for (auto& o : offsets) {
                do o = off(rng);
                while (!used.insert(o).second);
            }
            for (std::int64_t a = 0; a < k; ++a)
                for (std::int64_t c = 0; c < k; ++c) {
                    const GeoPoint bend{2, gi * gap + offsets[static_cast<std::size_t>(a * k + c)]};
                    g.edges.push_back(GeoEdge{(a * k + c) * k + gi, a, 2 * k + c, {bend}});
                }
        }
        std::sort(g.edges.begin(), g.edges.end(), [](const GeoEdge& x, const GeoEdge& y) { return x.id < y.id; });
        return g;
    });
}

Drawing gen_tripartite(std::int32_t n) { return import_geometric(tripartite_geometry(n)); }

GeometricDrawing random_straight_line(std::int32_t n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_straight_line: n must be positive");
    return first_valid(seed, [&](std::mt19937_64& rng) {
        std::uniform_int_distribution<std::int64_t> coord(0, 10'000);
        GeometricDrawing g;
        std::set<std::pair<std::int64_t, std::int64_t>> used;
        for (std::int32_t v = 0; v < n; ++v) {
            GeoPoint p;
            do p = GeoPoint{coord(rng), coord(rng)};
            while (!used.insert({p.x, p.y}).second);
            g.vertices.push_back(GeoVertex{v, p});
        }
        EdgeId next = 0;
        for (std::int32_t u = 0; u < n; ++u)
            for (std::int32_t v = u + 1; v < n; ++v)
                if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < edge_probability)
                    g.edges.push_back(GeoEdge{next++, u, v, {}});
        return g;
    });
}

}  // namespace branching
