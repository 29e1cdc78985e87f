#include "branching/geometric.hpp"

#include "branching/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace branching {

namespace {

using i128 = __int128;
constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;

[[noreturn]] void fail(const std::string& what) { throw DrawingError("geometric import: " + what); }

int sign(i128 v) { return (v > 0) - (v < 0); }

i128 cross(const GeoPoint& o, const GeoPoint& a, const GeoPoint& b) {
    return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

std::string show(const GeoPoint& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

struct RPoint {
    Rational x, y;
    friend bool operator<(const RPoint& a, const RPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
    friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x && a.y == b.y; }
};

RPoint to_r(const GeoPoint& p) { return RPoint{Rational(p.x), Rational(p.y)}; }

Rational rcross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

struct Segment {
    EdgeIndex edge = 0;
    std::int32_t index = 0;  // position along its polyline
    GeoPoint a, b;
    std::int32_t offset = 0;  // crossings on earlier segments of the polyline
    std::vector<std::pair<Rational, std::int32_t>> crossings;  // (parameter, crossing id)
};

// Half-plane then cross product: counterclockwise order of directions from east.
bool angle_less(const GeoPoint& a, const GeoPoint& b) {
    auto half = [](const GeoPoint& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
    if (half(a) != half(b)) return half(a) < half(b);
    return sign(static_cast<i128>(a.x) * b.y - static_cast<i128>(a.y) * b.x) > 0;
}

GeoPoint minus(const GeoPoint& a, const GeoPoint& b) { return GeoPoint{a.x - b.x, a.y - b.y}; }

class Importer {
public:
    explicit Importer(const GeometricDrawing& g) : g_(g) {}

    Drawing run() {
        index_vertices();
        collect_segments();
        check_points();
        find_crossings();
        DrawingSpec spec = planarize();
        const Drawing flat = build_drawing(spec);
        place_components(flat, spec);
        return build_drawing(spec);
    }

private:
    void index_vertices() {
        std::set<std::pair<std::int64_t, std::int64_t>> seen;
        for (std::size_t i = 0; i < g_.vertices.size(); ++i) {
            const auto& v = g_.vertices[i];
            check_range(v.at);
            if (!index_.emplace(v.id, static_cast<VertexIndex>(i)).second) fail("duplicate vertex id " + std::to_string(v.id));
            if (!seen.insert({v.at.x, v.at.y}).second) fail("two vertices at " + show(v.at));
        }
    }

    static void check_range(const GeoPoint& p) {
        if (p.x <= -kCoordLimit || p.x >= kCoordLimit || p.y <= -kCoordLimit || p.y >= kCoordLimit)
            fail("coordinate out of range at " + show(p));
    }

    const GeoPoint& vpoint(VertexId id) const { return g_.vertices[static_cast<std::size_t>(index_.at(id))].at; }

    void collect_segments() {
        std::set<EdgeId> ids;
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            const GeoEdge& edge = g_.edges[e];
            if (!ids.insert(edge.id).second) fail("duplicate edge id " + std::to_string(edge.id));
            if (!index_.count(edge.u) || !index_.count(edge.v))
                fail("edge " + std::to_string(edge.id) + " names an unknown vertex");
            std::vector<GeoPoint> chain{vpoint(edge.u)};
            for (const GeoPoint& w : edge.waypoints) {
                check_range(w);
                chain.push_back(w);
            }
            chain.push_back(vpoint(edge.v));
            first_seg_.push_back(static_cast<std::int32_t>(segs_.size()));
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                if (chain[i] == chain[i + 1]) fail("zero-length segment on edge " + std::to_string(edge.id));
                segs_.push_back(Segment{static_cast<EdgeIndex>(e), static_cast<std::int32_t>(i), chain[i], chain[i + 1], 0, {}});
            }
        }
        first_seg_.push_back(static_cast<std::int32_t>(segs_.size()));
    }

    void check_points() {
        std::map<std::pair<std::int64_t, std::int64_t>, EdgeId> bends;
        for (const auto& v : g_.vertices) bends.emplace(std::pair{v.at.x, v.at.y}, -1);
        for (const GeoEdge& edge : g_.edges)
            for (const GeoPoint& w : edge.waypoints) {
                auto [it, fresh] = bends.emplace(std::pair{w.x, w.y}, edge.id);
                if (fresh) continue;
                if (it->second < 0) fail("vertex at " + show(w) + " lies on the interior of edge " + std::to_string(edge.id));
                fail("edges " + std::to_string(it->second) + " and " + std::to_string(edge.id) + " share the bend point " + show(w));
            }
        // A vertex strictly inside a segment.
        for (const Segment& s : segs_)
            for (const auto& v : g_.vertices) {
                if (v.at == s.a || v.at == s.b) continue;
                if (on_segment(s.a, s.b, v.at))
                    fail("vertex " + std::to_string(v.id) + " lies on the interior of edge " +
                         std::to_string(g_.edges[static_cast<std::size_t>(s.edge)].id));
            }
    }

    static bool on_segment(const GeoPoint& a, const GeoPoint& b, const GeoPoint& p) {
        if (cross(a, b, p) != 0) return false;
        return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
               p.y <= std::max(a.y, b.y);
    }

    EdgeId eid(const Segment& s) const { return g_.edges[static_cast<std::size_t>(s.edge)].id; }

    void find_crossings() {
        std::map<RPoint, std::int32_t> at;
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            for (std::size_t j = i + 1; j < segs_.size(); ++j) {
                Segment& s = segs_[i];
                Segment& t = segs_[j];
                const int o1 = sign(cross(s.a, s.b, t.a));
                const int o2 = sign(cross(s.a, s.b, t.b));
                const int o3 = sign(cross(t.a, t.b, s.a));
                const int o4 = sign(cross(t.a, t.b, s.b));
                const std::string pair =
                    "edges " + std::to_string(eid(s)) + " and " + std::to_string(eid(t));
                if (o1 == 0 && o2 == 0) {
                    if (collinear_overlap(s, t)) fail("overlapping collinear segments on " + pair);
                    continue;
                }
                const bool shared = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
                if (shared) continue;  // only the common endpoint can be shared
                if (o1 * o2 < 0 && o3 * o4 < 0) {
                    if (s.edge == t.edge) fail("edge " + std::to_string(eid(s)) + " crosses itself");
                    const i128 den = static_cast<i128>(s.b.x - s.a.x) * (t.b.y - t.a.y) -
                                     static_cast<i128>(s.b.y - s.a.y) * (t.b.x - t.a.x);
                    const i128 num_s = static_cast<i128>(t.a.x - s.a.x) * (t.b.y - t.a.y) -
                                       static_cast<i128>(t.a.y - s.a.y) * (t.b.x - t.a.x);
                    const i128 num_t = static_cast<i128>(t.a.x - s.a.x) * (s.b.y - s.a.y) -
                                       static_cast<i128>(t.a.y - s.a.y) * (s.b.x - s.a.x);
                    const Rational ps = make_ratio(to_big(num_s), to_big(den));
                    const Rational pt = make_ratio(to_big(num_t), to_big(den));
                    RPoint p{Rational(s.a.x) + ps * (s.b.x - s.a.x), Rational(s.a.y) + ps * (s.b.y - s.a.y)};
                    const auto id = static_cast<std::int32_t>(cross_pts_.size());
                    if (!at.emplace(p, id).second) fail("three segments meet at one point (" + pair + ")");
                    cross_pts_.push_back(p);
                    cross_segs_.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
                    s.crossings.push_back({ps, id});
                    t.crossings.push_back({pt, id});
                    continue;
                }
                if (o1 * o2 <= 0 && o3 * o4 <= 0) fail("segments of " + pair + " touch without crossing");
            }
        }
    }

    static BigInt to_big(i128 v) {
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        BigInt r = static_cast<std::uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(u);
        return neg ? BigInt(-r) : r;
    }

    static bool collinear_overlap(const Segment& s, const Segment& t) {
        const bool use_x = s.a.x != s.b.x;
        auto key = [&](const GeoPoint& p) { return use_x ? p.x : p.y; };
        const auto lo = std::max(std::min(key(s.a), key(s.b)), std::min(key(t.a), key(t.b)));
        const auto hi = std::min(std::max(key(s.a), key(s.b)), std::max(key(t.a), key(t.b)));
        return lo < hi;
    }

    DrawingSpec planarize() {
        DrawingSpec spec;
        VertexId next_id = 0;
        for (const auto& v : g_.vertices) next_id = std::max(next_id, v.id + 1);
        crossing_node_base_ = next_id;
        std::vector<std::int32_t> total(g_.edges.size(), 0);
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            std::int32_t run = 0;
            for (auto k = first_seg_[e]; k < first_seg_[e + 1]; ++k) {
                Segment& s = segs_[static_cast<std::size_t>(k)];
                std::sort(s.crossings.begin(), s.crossings.end());
                s.offset = run;
                run += static_cast<std::int32_t>(s.crossings.size());
            }
            total[e] = run;
            const GeoEdge& edge = g_.edges[e];
            spec.edges.push_back(EdgeSpec{edge.id, edge.u, edge.v});
            if (edge.u == edge.v) spec.allow_loops = true;
        }

        // Real vertices: darts sorted by the direction of their first segment.
        std::vector<std::vector<std::pair<GeoPoint, DartRef>>> at(g_.vertices.size());
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            const Segment& first = segs_[static_cast<std::size_t>(first_seg_[e])];
            const Segment& last = segs_[static_cast<std::size_t>(first_seg_[e + 1] - 1)];
            const GeoEdge& edge = g_.edges[e];
            at[static_cast<std::size_t>(index_.at(edge.u))].push_back({minus(first.b, first.a), DartRef{edge.id, 0, true}});
            at[static_cast<std::size_t>(index_.at(edge.v))].push_back({minus(last.a, last.b), DartRef{edge.id, total[e], false}});
        }
        for (std::size_t v = 0; v < g_.vertices.size(); ++v) {
            auto& list = at[v];
            std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
            NodeSpec node{g_.vertices[v].id, NodeKind::Real, {}};
            for (const auto& [dir, dart] : list) node.rotation.push_back(dart);
            spec.nodes.push_back(std::move(node));
        }

        // Crossing nodes.
        std::vector<std::pair<std::int32_t, std::int32_t>> pos(cross_pts_.size());  // position on (first, second) segment's edge
        for (const Segment& s : segs_)
            for (std::size_t k = 0; k < s.crossings.size(); ++k) {
                const auto id = static_cast<std::size_t>(s.crossings[k].second);
                const auto here = s.offset + static_cast<std::int32_t>(k);
                const bool is_first = &segs_[static_cast<std::size_t>(cross_segs_[id].first)] == &s;
                (is_first ? pos[id].first : pos[id].second) = here;
            }
        for (std::size_t k = 0; k < cross_pts_.size(); ++k) {
            const Segment& s = segs_[static_cast<std::size_t>(cross_segs_[k].first)];
            const Segment& t = segs_[static_cast<std::size_t>(cross_segs_[k].second)];
            const DartRef s_out{eid(s), pos[k].first + 1, true}, s_in{eid(s), pos[k].first, false};
            const DartRef t_out{eid(t), pos[k].second + 1, true}, t_in{eid(t), pos[k].second, false};
            const bool left = sign(static_cast<i128>(s.b.x - s.a.x) * (t.b.y - t.a.y) -
                                   static_cast<i128>(s.b.y - s.a.y) * (t.b.x - t.a.x)) > 0;
            NodeSpec node{crossing_node_base_ + static_cast<std::int64_t>(k), NodeKind::Crossing, {}};
            node.rotation = left ? std::vector<DartRef>{s_out, t_out, s_in, t_in} : std::vector<DartRef>{s_out, t_in, s_in, t_out};
            spec.nodes.push_back(std::move(node));
        }
        return spec;
    }

    // ---- nesting by ray shooting --------------------------------------------------

    struct Geometry {
        std::vector<std::int32_t> segments;
        std::vector<RPoint> bad;  // vertices, bends and crossings
    };

    // Face of component K (as a dart with the face on its left) that contains point p.
    std::optional<DartRef> locate(const RPoint& p, const Geometry& k) const {
        for (const std::int32_t si : k.segments) {
            const Segment& target = segs_[static_cast<std::size_t>(si)];
            const std::size_t tries = k.bad.size() + 3;
            for (std::size_t q = 2; q < tries + 2; ++q) {
                const Rational s(1, static_cast<long long>(q));
                const Rational zx = Rational(target.a.x) + s * (target.b.x - target.a.x);
                const Rational zy = Rational(target.a.y) + s * (target.b.y - target.a.y);
                const Rational dx = zx - p.x, dy = zy - p.y;
                if (dx == 0 && dy == 0) continue;
                bool blocked = false;
                for (const RPoint& b : k.bad) {
                    const Rational bx = b.x - p.x, by = b.y - p.y;
                    if (bx == 0 && by == 0) continue;
                    if (rcross(dx, dy, bx, by) == 0 && dx * bx + dy * by > 0) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) continue;
                return nearest_hit(p, dx, dy, k);
            }
        }
        return std::nullopt;
    }

    DartRef nearest_hit(const RPoint& p, const Rational& dx, const Rational& dy, const Geometry& k) const {
        std::optional<Rational> best;
        DartRef hit{};
        for (const std::int32_t si : k.segments) {
            const Segment& s = segs_[static_cast<std::size_t>(si)];
            const Rational ax = Rational(s.a.x) - p.x, ay = Rational(s.a.y) - p.y;
            const Rational bx = Rational(s.b.x) - p.x, by = Rational(s.b.y) - p.y;
            const Rational oa = rcross(dx, dy, ax, ay);
            const Rational ob = rcross(dx, dy, bx, by);
            if (!((oa > 0 && ob < 0) || (oa < 0 && ob > 0))) continue;
            const Rational ex = Rational(s.b.x - s.a.x), ey = Rational(s.b.y - s.a.y);
            const Rational den = rcross(dx, dy, ex, ey);
            const Rational lambda = rcross(ax, ay, ex, ey) / den;
            if (lambda <= 0) continue;
            if (best && lambda >= *best) continue;
            best = lambda;
            const Rational t = rcross(ax, ay, dx, dy) / den;
            std::int32_t before = 0;
            for (const auto& c : s.crossings) before += c.first < t ? 1 : 0;
            // p is left of a -> b when cross(b - a, p - a) > 0, i.e. cross(e, -a') > 0.
            const bool left = rcross(ex, ey, -ax, -ay) > 0;
            hit = DartRef{eid(s), s.offset + before, left};
        }
        if (!best) throw std::logic_error("geometric import: ray aimed at a segment missed");
        return hit;
    }

    void place_components(const Drawing& flat, DrawingSpec& spec) const {
        const PlanarMap& map = flat.map();
        const std::int32_t comps = map.component_count();
        std::vector<Geometry> geo(static_cast<std::size_t>(comps));
        for (std::size_t v = 0; v < g_.vertices.size(); ++v)
            geo[static_cast<std::size_t>(map.component(static_cast<NodeIndex>(v)))].bad.push_back(to_r(g_.vertices[v].at));
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            auto& gk = geo[static_cast<std::size_t>(map.component(flat.edge(static_cast<EdgeIndex>(e)).u))];
            for (auto k = first_seg_[e]; k < first_seg_[e + 1]; ++k) {
                gk.segments.push_back(k);
                const Segment& s = segs_[static_cast<std::size_t>(k)];
                if (k > first_seg_[e]) gk.bad.push_back(to_r(s.a));
                for (const auto& c : s.crossings) gk.bad.push_back(cross_pts_[static_cast<std::size_t>(c.second)]);
            }
        }
        std::vector<std::optional<DartRef>> outer(static_cast<std::size_t>(comps));
        for (std::int32_t c = 0; c < comps; ++c)
            if (map.component_arc_count(c) > 0) outer[static_cast<std::size_t>(c)] = outer_of(flat, c, geo[static_cast<std::size_t>(c)]);

        auto face_of = [&](const DartRef& r) { return map.face(flat.dart_index(r)); };
        // inside[l][k]: face of k holding l, when it is a bounded face of k.
        std::vector<std::vector<std::optional<DartRef>>> inside(
            static_cast<std::size_t>(comps), std::vector<std::optional<DartRef>>(static_cast<std::size_t>(comps)));
        std::vector<std::int32_t> depth(static_cast<std::size_t>(comps), 0);
        for (std::int32_t l = 0; l < comps; ++l) {
            const RPoint probe = to_r(g_.vertices[static_cast<std::size_t>(map.component_nodes(l)[0])].at);
            for (std::int32_t k = 0; k < comps; ++k) {
                if (k == l || !outer[static_cast<std::size_t>(k)] || map.component_faces(k).size() < 2) continue;
                const auto where = locate(probe, geo[static_cast<std::size_t>(k)]);
                if (where && face_of(*where) != face_of(*outer[static_cast<std::size_t>(k)])) {
                    inside[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = where;
                    ++depth[static_cast<std::size_t>(l)];
                }
            }
        }
        std::int32_t root = kNone;
        for (std::int32_t c = 0; c < comps && root == kNone; ++c)
            if (depth[static_cast<std::size_t>(c)] == 0 && outer[static_cast<std::size_t>(c)]) root = c;
        if (root == kNone) return;  // only isolated vertices
        spec.outer_face = outer[static_cast<std::size_t>(root)];
        for (std::int32_t l = 0; l < comps; ++l) {
            if (l == root) continue;
            // The innermost enclosing component is the one nested deepest itself.
            std::int32_t parent = kNone;
            for (std::int32_t k = 0; k < comps; ++k) {
                if (!inside[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)]) continue;
                if (parent == kNone || depth[static_cast<std::size_t>(k)] > depth[static_cast<std::size_t>(parent)]) parent = k;
            }
            PlacementSpec p;
            p.node = g_.vertices[static_cast<std::size_t>(map.component_nodes(l)[0])].id;
            p.host = parent == kNone ? *outer[static_cast<std::size_t>(root)]
                                     : *inside[static_cast<std::size_t>(l)][static_cast<std::size_t>(parent)];
            p.outer = outer[static_cast<std::size_t>(l)];
            spec.placements.push_back(p);
        }
    }

    // Unbounded face of component c, located from a point left of its leftmost point.
    DartRef outer_of(const Drawing& flat, std::int32_t c, const Geometry& gk) const {
        const PlanarMap& map = flat.map();
        const DartRef any = flat.dart_ref(map.face_dart(map.component_faces(c).front()));
        if (map.component_faces(c).size() == 1) return any;
        RPoint low = gk.bad.front();
        for (const RPoint& b : gk.bad) low = std::min(low, b);
        const auto got = locate(RPoint{low.x - 1, low.y}, gk);
        return got ? *got : any;
    }

    const GeometricDrawing& g_;
    std::unordered_map<VertexId, VertexIndex> index_;
    std::vector<Segment> segs_;
    std::vector<std::int32_t> first_seg_;
    std::vector<RPoint> cross_pts_;
    std::vector<std::pair<std::int32_t, std::int32_t>> cross_segs_;
    std::int64_t crossing_node_base_ = 0;
};

}  // namespace

Drawing import_geometric(const GeometricDrawing& g) { return Importer(g).run(); }

GeometricDrawing translate(const GeometricDrawing& g, std::int64_t dx, std::int64_t dy) {
    GeometricDrawing out = g;
    for (auto& v : out.vertices) v.at = GeoPoint{v.at.x + dx, v.at.y + dy};
    for (auto& e : out.edges)
        for (auto& w : e.waypoints) w = GeoPoint{w.x + dx, w.y + dy};
    return out;
}

GeometricDrawing rotate90(const GeometricDrawing& g) {
    GeometricDrawing out = g;
    for (auto& v : out.vertices) v.at = GeoPoint{-v.at.y, v.at.x};
    for (auto& e : out.edges)
        for (auto& w : e.waypoints) w = GeoPoint{-w.y, w.x};
    return out;
}

}  // namespace branching
