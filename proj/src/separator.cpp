#include "branching/separator.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <list>
#include <map>
#include <numeric>
#include <unordered_set>

namespace branching {

namespace {

using Wide = __int128;
constexpr Wide kWideLimit = static_cast<Wide>(1) << 120;

BigInt to_big(Wide x) {
    const bool negative = x < 0;
    const auto u = negative ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    BigInt r(static_cast<std::uint64_t>(u >> 64));
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return negative ? -r : r;
}

Wide to_wide(const BigInt& x) {
    assert(x >= 0);
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    const auto lo = static_cast<std::uint64_t>(x & BigInt(~std::uint64_t{0}));
    return static_cast<Wide>((static_cast<unsigned __int128>(hi) << 64) | lo);
}

// Weights rescaled to integers over a common denominator.
struct ScaledWeights {
    std::vector<Wide> w;
    Wide total = 0;
    BigInt denominator = 1;

    Rational value(Wide x) const { return make_ratio(to_big(x), denominator); }
};

ScaledWeights scale(const std::vector<Rational>& weight) {
    ScaledWeights s;
    for (const auto& x : weight) {
        if (x < 0) throw std::invalid_argument("separator weights must be nonnegative");
        s.denominator = boost::multiprecision::lcm(s.denominator, denominator(x));
    }
    BigInt total = 0;
    s.w.reserve(weight.size());
    for (const auto& x : weight) {
        const BigInt v = numerator(x) * (s.denominator / denominator(x));
        total += v;
        if (total >= to_big(kWideLimit))
            throw std::range_error("separator weights exceed the 120-bit integer range over their common denominator");
        s.w.push_back(to_wide(v));
    }
    s.total = to_wide(total);
    if (s.total == 0) throw std::invalid_argument("separator needs positive total weight");
    return s;
}

// Darts leaving each node, flattened.
struct NodeDarts {
    std::vector<std::int32_t> start;
    std::vector<DartIndex> darts;

    explicit NodeDarts(const PlanarMap& map) {
        const auto n = static_cast<std::size_t>(map.node_count());
        start.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) start[v + 1] = start[v] + map.degree(static_cast<NodeIndex>(v));
        darts.reserve(static_cast<std::size_t>(start[n]));
        for (std::size_t v = 0; v < n; ++v)
            for (DartIndex d : map.rotation(static_cast<NodeIndex>(v))) darts.push_back(d);
    }
    std::span<const DartIndex> of(NodeIndex v) const {
        const auto b = static_cast<std::size_t>(start[static_cast<std::size_t>(v)]);
        const auto e = static_cast<std::size_t>(start[static_cast<std::size_t>(v) + 1]);
        return {darts.data() + b, e - b};
    }
};

struct Bfs {
    std::vector<std::int32_t> depth;
    std::vector<ArcIndex> parent_arc;
    std::vector<NodeIndex> order;
};

Bfs bfs(const PlanarMap& map, const NodeDarts& adj, NodeIndex root) {
    Bfs b;
    const auto n = static_cast<std::size_t>(map.node_count());
    b.depth.assign(n, -1);
    b.parent_arc.assign(n, kNone);
    b.order.reserve(n);
    b.depth[static_cast<std::size_t>(root)] = 0;
    b.order.push_back(root);
    for (std::size_t head = 0; head < b.order.size(); ++head) {
        const NodeIndex v = b.order[head];
        for (DartIndex d : adj.of(v)) {
            const NodeIndex t = map.target(d);
            if (b.depth[static_cast<std::size_t>(t)] >= 0) continue;
            b.depth[static_cast<std::size_t>(t)] = b.depth[static_cast<std::size_t>(v)] + 1;
            b.parent_arc[static_cast<std::size_t>(t)] = PlanarMap::arc_of(d);
            b.order.push_back(t);
        }
    }
    return b;
}

NodeIndex deepest(const Bfs& b) {
    NodeIndex best = b.order.front();
    for (NodeIndex v : b.order)
        if (b.depth[static_cast<std::size_t>(v)] > b.depth[static_cast<std::size_t>(best)] ||
            (b.depth[static_cast<std::size_t>(v)] == b.depth[static_cast<std::size_t>(best)] && v < best))
            best = v;
    return best;
}

struct Candidate {
    std::int32_t length = 0;
    ArcIndex arc = kNone;
    FaceIndex child = kNone;
    NodeIndex lca = kNone;
};

class Search {
public:
    Search(const WeightInput& in, const ScaledWeights& sw, const NodeDarts& adj)
        : map_(in.map), sw_(sw), adj_(adj) {
        const auto n = static_cast<std::size_t>(map_.node_count());
        dface_.resize(n);
        face_weight_.assign(static_cast<std::size_t>(map_.face_count()), 0);
        for (std::size_t v = 0; v < n; ++v) {
            dface_[v] = map_.face(map_.first_dart(static_cast<NodeIndex>(v)));
            face_weight_[static_cast<std::size_t>(dface_[v])] += sw_.w[v];
        }
        face_darts_start_.assign(static_cast<std::size_t>(map_.face_count()) + 1, 0);
        for (DartIndex d = 0; d < map_.dart_count(); ++d) ++face_darts_start_[static_cast<std::size_t>(map_.face(d)) + 1];
        for (std::size_t f = 0; f < static_cast<std::size_t>(map_.face_count()); ++f)
            face_darts_start_[f + 1] += face_darts_start_[f];
        face_darts_.resize(static_cast<std::size_t>(map_.dart_count()));
        auto fill = face_darts_start_;
        for (DartIndex d = 0; d < map_.dart_count(); ++d)
            face_darts_[static_cast<std::size_t>(fill[static_cast<std::size_t>(map_.face(d))]++)] = d;
    }

    /// Shortest balanced fundamental cycle of the BFS tree rooted at `root`.
    std::optional<SeparatorCycle> run(NodeIndex root) {
        build_tree(root);
        build_cotree();
        std::vector<Candidate> cands;
        const Wide W = sw_.total;
        for (ArcIndex a = 0; a < map_.arc_count(); ++a) {
            if (tree_arc_[static_cast<std::size_t>(a)]) continue;
            const NodeIndex u = map_.node(2 * a);
            const NodeIndex v = map_.node(2 * a + 1);
            if (u == v) continue;
            const FaceIndex f1 = map_.face(2 * a);
            const FaceIndex child = face_parent_arc_[static_cast<std::size_t>(f1)] == a ? f1 : map_.face(2 * a + 1);
            const NodeIndex l = lca(u, v);
            const Wide wc = prefix_[static_cast<std::size_t>(u)] + prefix_[static_cast<std::size_t>(v)] -
                            2 * prefix_[static_cast<std::size_t>(l)] + sw_.w[static_cast<std::size_t>(l)];
            const Wide a_upper = subtree_[static_cast<std::size_t>(child)];
            // Inside weight lies in [a_upper - wc, a_upper]; drop cycles that cannot balance.
            if (6 * a_upper - 3 * wc > 4 * W) continue;
            if (6 * (W - a_upper) - 3 * wc > 4 * W) continue;
            const std::int32_t len = depth(u) + depth(v) - 2 * depth(l) + 1;
            cands.push_back(Candidate{len, a, child, l});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& x, const Candidate& y) { return std::tie(x.length, x.arc) < std::tie(y.length, y.arc); });
        for (const Candidate& c : cands)
            if (auto s = realize(c, root)) return s;
        return std::nullopt;
    }

private:
    std::int32_t depth(NodeIndex v) const { return tree_.depth[static_cast<std::size_t>(v)]; }
    NodeIndex parent(NodeIndex v) const {
        const ArcIndex a = tree_.parent_arc[static_cast<std::size_t>(v)];
        if (a == kNone) return kNone;
        const NodeIndex t = map_.node(2 * a);
        return t == v ? map_.node(2 * a + 1) : t;
    }
    bool in_subtree(FaceIndex f, FaceIndex child) const {
        return tin_[static_cast<std::size_t>(child)] <= tin_[static_cast<std::size_t>(f)] &&
               tin_[static_cast<std::size_t>(f)] < tout_[static_cast<std::size_t>(child)];
    }

    void build_tree(NodeIndex root) {
        tree_ = bfs(map_, adj_, root);
        const auto n = static_cast<std::size_t>(map_.node_count());
        tree_arc_.assign(static_cast<std::size_t>(map_.arc_count()), 0);
        prefix_.assign(n, 0);
        levels_ = 1;
        while ((1 << levels_) < map_.node_count()) ++levels_;
        up_.assign(static_cast<std::size_t>(levels_), std::vector<NodeIndex>(n, root));
        for (NodeIndex v : tree_.order) {
            const NodeIndex p = parent(v);
            const auto vi = static_cast<std::size_t>(v);
            if (p == kNone) {
                prefix_[vi] = sw_.w[vi];
                continue;
            }
            tree_arc_[static_cast<std::size_t>(tree_.parent_arc[vi])] = 1;
            prefix_[vi] = prefix_[static_cast<std::size_t>(p)] + sw_.w[vi];
            up_[0][vi] = p;
        }
        for (std::size_t k = 1; k < static_cast<std::size_t>(levels_); ++k)
            for (std::size_t v = 0; v < n; ++v) up_[k][v] = up_[k - 1][static_cast<std::size_t>(up_[k - 1][v])];
    }

    NodeIndex lca(NodeIndex a, NodeIndex b) const {
        if (depth(a) < depth(b)) std::swap(a, b);
        std::int32_t diff = depth(a) - depth(b);
        for (std::size_t k = 0; diff > 0; ++k, diff >>= 1)
            if (diff & 1) a = up_[k][static_cast<std::size_t>(a)];
        if (a == b) return a;
        for (auto k = static_cast<std::size_t>(levels_); k-- > 0;) {
            const NodeIndex pa = up_[k][static_cast<std::size_t>(a)];
            const NodeIndex pb = up_[k][static_cast<std::size_t>(b)];
            if (pa != pb) {
                a = pa;
                b = pb;
            }
        }
        return up_[0][static_cast<std::size_t>(a)];
    }

    // Non-tree arcs form a spanning tree of the dual; Euler tour it from face 0.
    void build_cotree() {
        const auto faces = static_cast<std::size_t>(map_.face_count());
        face_parent_arc_.assign(faces, kNone);
        tin_.assign(faces, -1);
        tout_.assign(faces, -1);
        subtree_ = face_weight_;
        std::int32_t clock = 0;
        std::vector<std::pair<FaceIndex, std::int32_t>> stack{{0, face_darts_start_[0]}};
        tin_[0] = clock++;
        while (!stack.empty()) {
            auto& [f, next] = stack.back();
            if (next == face_darts_start_[static_cast<std::size_t>(f) + 1]) {
                tout_[static_cast<std::size_t>(f)] = clock;
                const FaceIndex done = f;
                stack.pop_back();
                if (!stack.empty()) subtree_[static_cast<std::size_t>(stack.back().first)] += subtree_[static_cast<std::size_t>(done)];
                continue;
            }
            const DartIndex d = face_darts_[static_cast<std::size_t>(next++)];
            const ArcIndex a = PlanarMap::arc_of(d);
            if (tree_arc_[static_cast<std::size_t>(a)]) continue;
            const FaceIndex g = map_.face(PlanarMap::twin(d));
            if (tin_[static_cast<std::size_t>(g)] >= 0) continue;  // the arc back to the parent
            tin_[static_cast<std::size_t>(g)] = clock++;
            face_parent_arc_[static_cast<std::size_t>(g)] = a;
            stack.emplace_back(g, face_darts_start_[static_cast<std::size_t>(g)]);
        }
    }

    std::optional<SeparatorCycle> realize(const Candidate& c, NodeIndex root) const {
        const NodeIndex u = map_.node(2 * c.arc);
        const NodeIndex v = map_.node(2 * c.arc + 1);
        std::vector<NodeIndex> cycle;
        for (NodeIndex x = u; x != c.lca; x = parent(x)) cycle.push_back(x);
        cycle.push_back(c.lca);
        std::vector<NodeIndex> down;
        for (NodeIndex x = v; x != c.lca; x = parent(x)) down.push_back(x);
        cycle.insert(cycle.end(), down.rbegin(), down.rend());

        Wide wc = 0;
        Wide correction = 0;
        for (NodeIndex x : cycle) {
            wc += sw_.w[static_cast<std::size_t>(x)];
            if (in_subtree(dface_[static_cast<std::size_t>(x)], c.child)) correction += sw_.w[static_cast<std::size_t>(x)];
        }
        const Wide W = sw_.total;
        const Wide a = subtree_[static_cast<std::size_t>(c.child)] - correction;
        const Wide b = W - a - wc;
        if (6 * a + 3 * wc > 4 * W || 6 * b + 3 * wc > 4 * W) return std::nullopt;

        SeparatorCycle s;
        std::vector<char> on(static_cast<std::size_t>(map_.node_count()), 0);
        for (NodeIndex x : cycle) on[static_cast<std::size_t>(x)] = 1;
        for (NodeIndex x = 0; x < map_.node_count(); ++x) {
            if (on[static_cast<std::size_t>(x)]) continue;
            (in_subtree(dface_[static_cast<std::size_t>(x)], c.child) ? s.inside : s.outside).push_back(x);
        }
        s.cycle = std::move(cycle);
        s.w_inside = sw_.value(a);
        s.w_outside = sw_.value(b);
        s.w_cycle = sw_.value(wc);
        s.total = sw_.value(W);
        s.root = root;
        return s;
    }

    const PlanarMap& map_;
    const ScaledWeights& sw_;
    const NodeDarts& adj_;
    std::vector<FaceIndex> dface_;
    std::vector<Wide> face_weight_;
    std::vector<std::int32_t> face_darts_start_;
    std::vector<DartIndex> face_darts_;

    Bfs tree_;
    std::vector<char> tree_arc_;
    std::vector<Wide> prefix_;
    std::int32_t levels_ = 1;
    std::vector<std::vector<NodeIndex>> up_;
    std::vector<ArcIndex> face_parent_arc_;
    std::vector<std::int32_t> tin_, tout_;
    std::vector<Wide> subtree_;
};

std::vector<NodeIndex> root_candidates(const PlanarMap& map, const NodeDarts& adj, const ScaledWeights& sw) {
    std::vector<NodeIndex> roots;
    const Bfs from0 = bfs(map, adj, 0);
    // Weighted median level: the first level at which half the weight is reached.
    std::vector<Wide> level_mass;
    for (NodeIndex v : from0.order) {
        const auto l = static_cast<std::size_t>(from0.depth[static_cast<std::size_t>(v)]);
        if (level_mass.size() <= l) level_mass.resize(l + 1, 0);
        level_mass[l] += sw.w[static_cast<std::size_t>(v)];
    }
    std::int32_t median = 0;
    for (Wide acc = 0; median < static_cast<std::int32_t>(level_mass.size()); ++median) {
        acc += level_mass[static_cast<std::size_t>(median)];
        if (2 * acc >= sw.total) break;
    }
    NodeIndex med = kNone;
    for (NodeIndex v = 0; v < map.node_count() && med == kNone; ++v)
        if (from0.depth[static_cast<std::size_t>(v)] == median) med = v;
    roots.push_back(med);

    // Approximate center: midpoint of a double-sweep diameter path.
    const NodeIndex a = deepest(bfs(map, adj, med));
    const Bfs froma = bfs(map, adj, a);
    NodeIndex mid = deepest(froma);
    const std::int32_t half = froma.depth[static_cast<std::size_t>(mid)] / 2;
    while (froma.depth[static_cast<std::size_t>(mid)] > half) {
        const ArcIndex pa = froma.parent_arc[static_cast<std::size_t>(mid)];
        mid = map.node(2 * pa) == mid ? map.node(2 * pa + 1) : map.node(2 * pa);
    }
    roots.push_back(mid);

    const auto heavy = static_cast<NodeIndex>(std::max_element(sw.w.begin(), sw.w.end()) - sw.w.begin());
    if (3 * sw.w[static_cast<std::size_t>(heavy)] > sw.total) roots.insert(roots.begin(), heavy);

    std::vector<NodeIndex> unique;
    for (NodeIndex r : roots)
        if (std::find(unique.begin(), unique.end(), r) == unique.end()) unique.push_back(r);
    return unique;
}

void require_connected(const PlanarMap& map) {
    PlanarMap copy = map;
    copy.finalize();
    if (copy.component_count() > 1) throw std::invalid_argument("map is not connected");
}

// Sum of rationals grouped by denominator, so long sums stay cheap.
class ExactSum {
public:
    void add(const Rational& x) {
        auto [it, fresh] = parts_.try_emplace(denominator(x), numerator(x));
        if (!fresh) it->second += numerator(x);
    }
    Rational value() const {
        Rational r = 0;
        for (const auto& [den, num] : parts_) r += make_ratio(num, den);
        return r;
    }

private:
    std::map<BigInt, BigInt> parts_;
};

}  // namespace

void link_components(PlanarMap& map, const Drawing& d, std::span<const NodeIndex> node_of) {
    const PlanarMap& src = d.map();
    bool linked = false;
    for (std::int32_t c = 0; c < src.component_count(); ++c) {
        if (d.component_parent(c) == kNone) continue;
        const DartIndex host = d.component_host(c);
        if (host == kNone) continue;
        linked = true;
        if (src.component_arc_count(c) > 0)
            map.add_chord(host, d.component_outer(c));
        else
            map.attach_isolated(node_of[static_cast<std::size_t>(src.component_nodes(c)[0])], host);
    }
    if (!linked && src.arc_count() == 0 && src.node_count() >= 2) {
        const ArcIndex first = map.add_arc(node_of[0], node_of[1], ArcLabel{});
        map.append_rotation(2 * first);
        map.append_rotation(2 * first + 1);
        for (std::size_t v = 2; v < node_of.size(); ++v) map.attach_isolated(node_of[v], 2 * first + 1);
    }
}

PlanarMap connected_map(const Drawing& d) {
    PlanarMap map = d.map();
    std::vector<NodeIndex> identity(static_cast<std::size_t>(map.node_count()));
    std::iota(identity.begin(), identity.end(), 0);
    link_components(map, d, identity);
    map.finalize();
    return map;
}

PlanarMap grid_map(std::int32_t k) {
    if (k < 1) throw std::invalid_argument("grid size must be positive");
    PlanarMap map;
    for (std::int32_t i = 0; i < k * k; ++i) map.add_node(NodeKind::Real);
    std::vector<DartIndex> east(static_cast<std::size_t>(k * k), kNone), west = east, north = east, south = east;
    for (std::int32_t r = 0; r < k; ++r)
        for (std::int32_t c = 0; c < k; ++c) {
            const std::int32_t v = r * k + c;
            if (c + 1 < k) {
                const ArcIndex a = map.add_arc(v, v + 1, ArcLabel{});
                east[static_cast<std::size_t>(v)] = 2 * a;
                west[static_cast<std::size_t>(v + 1)] = 2 * a + 1;
            }
            if (r + 1 < k) {
                const ArcIndex a = map.add_arc(v, v + k, ArcLabel{});
                north[static_cast<std::size_t>(v)] = 2 * a;
                south[static_cast<std::size_t>(v + k)] = 2 * a + 1;
            }
        }
    for (std::size_t v = 0; v < static_cast<std::size_t>(k * k); ++v)
        for (DartIndex d : {east[v], north[v], west[v], south[v]})
            if (d != kNone) map.append_rotation(d);
    map.finalize();
    return map;
}

PlanarMap triangulate(const PlanarMap& input) {
    require_connected(input);
    PlanarMap map = input;
    map.finalize();
    std::unordered_set<std::uint64_t> adjacent;
    auto key = [](NodeIndex a, NodeIndex b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    };
    for (ArcIndex a = 0; a < map.arc_count(); ++a) adjacent.insert(key(map.node(2 * a), map.node(2 * a + 1)));

    const std::int32_t faces = map.face_count();
    std::vector<std::list<DartIndex>> walks(static_cast<std::size_t>(faces));
    for (FaceIndex f = 0; f < faces; ++f) {
        if (map.face_size(f) < 4) continue;
        const DartIndex s = map.face_dart(f);
        DartIndex d = s;
        do {
            walks[static_cast<std::size_t>(f)].push_back(d);
            d = map.face_next(d);
        } while (d != s);
    }
    for (auto& walk : walks) {
        auto next = [&walk](std::list<DartIndex>::iterator it) {
            return ++it == walk.end() ? walk.begin() : it;
        };
        auto pos = walk.begin();
        while (walk.size() > 3) {
            // Ear (d_j, d_j+1) closed by a chord from node(d_j) to node(d_j+2).
            auto pick = walk.end();
            auto it = pos;
            for (std::size_t tries = 0; tries < walk.size(); ++tries, it = next(it)) {
                const NodeIndex a = map.node(*it);
                const NodeIndex b = map.node(*next(next(it)));
                if (a == b) continue;
                if (!adjacent.contains(key(a, b))) {
                    pick = it;
                    break;
                }
                if (pick == walk.end()) pick = it;
            }
            if (pick == walk.end()) throw std::logic_error("face cannot be triangulated without a loop");
            const auto mid = next(pick);
            const DartIndex far = *next(mid);
            const ArcIndex a = map.add_chord(*pick, far);
            adjacent.insert(key(map.node(*pick), map.node(far)));
            *pick = 2 * a;
            walk.erase(mid);
            pos = pick;
        }
    }
    map.finalize();
    return map;
}

SeparatorCycle cycle_separator(const WeightInput& in, const Rational& c_target) {
    const PlanarMap& map = in.map;
    if (static_cast<std::int32_t>(in.weight.size()) != map.node_count())
        throw std::invalid_argument("one weight per node required");
    if (map.node_count() < 4) throw std::invalid_argument("separator needs at least 4 nodes");
    if (map.component_count() != 1) throw std::invalid_argument("separator needs a connected map");
    const ScaledWeights sw = scale(in.weight);
    const NodeDarts adj(map);
    Search search(in, sw, adj);
    std::optional<SeparatorCycle> best;
    std::int32_t tried = 0;
    for (NodeIndex root : root_candidates(map, adj, sw)) {
        ++tried;
        auto s = search.run(root);
        if (!s) continue;
        if (!best || s->size() < best->size()) best = std::move(s);
        if (within_size_bound(best->size(), map.node_count(), c_target)) break;
    }
    if (!best) throw SeparatorError("no balanced fundamental cycle for any tried root");
    best->roots_tried = tried;
    return *std::move(best);
}

bool within_size_bound(std::int32_t cycle_size, std::int32_t nodes, const Rational& c_sep) {
    return le_scaled_sqrt(make_rational(cycle_size), c_sep, make_rational(nodes));
}

bool verify_separator(const WeightInput& in, const SeparatorCycle& s, const Rational& c_sep, std::string* failure) {
    auto fail = [failure](const std::string& why) {
        if (failure) *failure = why;
        return false;
    };
    const PlanarMap& map = in.map;
    const std::int32_t n = map.node_count();
    if (static_cast<std::int32_t>(in.weight.size()) != n) return fail("weight count differs from node count");
    if (s.cycle.size() < 2) return fail("cycle has fewer than two nodes");

    enum : char { kUnseen, kCycle, kInside, kOutside };
    std::vector<char> role(static_cast<std::size_t>(n), kUnseen);
    auto assign = [&](const std::vector<NodeIndex>& nodes, char r) {
        for (NodeIndex v : nodes) {
            if (v < 0 || v >= n) return false;
            if (role[static_cast<std::size_t>(v)] != kUnseen) return false;
            role[static_cast<std::size_t>(v)] = r;
        }
        return true;
    };
    if (!assign(s.cycle, kCycle)) return fail("cycle repeats a node or names an unknown one");
    if (!assign(s.inside, kInside) || !assign(s.outside, kOutside)) return fail("sides overlap the cycle or each other");
    for (char r : role)
        if (r == kUnseen) return fail("cycle and sides do not cover every node");

    // Consecutive cycle nodes must be joined by distinct arcs.
    std::map<std::pair<NodeIndex, NodeIndex>, std::int32_t> multiplicity;
    for (ArcIndex a = 0; a < map.arc_count(); ++a) {
        const NodeIndex x = std::min(map.node(2 * a), map.node(2 * a + 1));
        const NodeIndex y = std::max(map.node(2 * a), map.node(2 * a + 1));
        if (role[static_cast<std::size_t>(x)] == kCycle && role[static_cast<std::size_t>(y)] == kCycle) ++multiplicity[{x, y}];
    }
    const std::size_t len = s.cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
        const NodeIndex x = std::min(s.cycle[i], s.cycle[(i + 1) % len]);
        const NodeIndex y = std::max(s.cycle[i], s.cycle[(i + 1) % len]);
        const std::int32_t need = len == 2 ? 2 : 1;
        if (multiplicity[{x, y}] < need) return fail("consecutive cycle nodes are not adjacent");
    }

    // Flood fill each side with the cycle removed; it must not reach the other side.
    const NodeDarts adj(map);
    for (const char side : {kInside, kOutside}) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::deque<NodeIndex> queue;
        for (NodeIndex v = 0; v < n; ++v)
            if (role[static_cast<std::size_t>(v)] == side) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        while (!queue.empty()) {
            const NodeIndex v = queue.front();
            queue.pop_front();
            for (DartIndex d : adj.of(v)) {
                const NodeIndex t = map.target(d);
                const char r = role[static_cast<std::size_t>(t)];
                if (r == kCycle || seen[static_cast<std::size_t>(t)]) continue;
                if (r != side) return fail("an arc joins the two sides");
                seen[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }
        }
    }

    ExactSum inside, outside, cycle;
    for (NodeIndex v = 0; v < n; ++v) {
        const Rational& w = in.weight[static_cast<std::size_t>(v)];
        if (w < 0) return fail("negative weight");
        switch (role[static_cast<std::size_t>(v)]) {
            case kCycle: cycle.add(w); break;
            case kInside: inside.add(w); break;
            default: outside.add(w); break;
        }
    }
    const Rational wi = inside.value(), wo = outside.value(), wc = cycle.value();
    const Rational total = wi + wo + wc;
    if (total <= 0) return fail("total weight is zero");
    const Rational limit = Rational(2) / 3 * total;
    if (wi + wc / 2 > limit) return fail("inside side too heavy");
    if (wo + wc / 2 > limit) return fail("outside side too heavy");
    if (!within_size_bound(s.size(), n, c_sep)) return fail("cycle longer than c_sep * sqrt(n)");
    return true;
}

}  // namespace branching
