#include "branching/validate.hpp"

#include "lens_internal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace branching {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::EmptyLens: return "empty-lens";
        case ViolationKind::AdjacentCross: return "adjacent-cross";
        case ViolationKind::DoubleCross: return "double-cross";
        case ViolationKind::TriplePoint: return "triple-point";
    }
    return "unknown";
}

std::size_t BranchingReport::count(ViolationKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
}

namespace {

bool share_endpoint(const Edge& a, const Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

}  // namespace

std::vector<Violation> empty_lenses(const Drawing& d) {
    std::vector<Violation> out;
    std::map<std::pair<VertexIndex, VertexIndex>, std::vector<EdgeIndex>> classes;
    for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
        const Edge& edge = d.edge(e);
        if (edge.is_loop()) continue;
        classes[{std::min(edge.u, edge.v), std::max(edge.u, edge.v)}].push_back(e);
    }
    bool any = false;
    for (const auto& [key, members] : classes) any = any || members.size() > 1;
    if (!any) return out;

    detail::LensOracle oracle(d);
    const PlanarMap& map = d.map();
    for (const auto& [key, members] : classes) {
        if (members.size() < 2) continue;
        const auto [u, v] = key;
        const std::int32_t comp = map.component(u);
        std::vector<FaceIndex> rep(static_cast<std::size_t>(d.vertex_count()), kNone);
        for (VertexIndex w = 0; w < d.vertex_count(); ++w)
            if (w != u && w != v) rep[static_cast<std::size_t>(w)] = oracle.face_of_vertex(comp, w);
        const FaceIndex outer = oracle.outer_face_in(comp);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const EdgeIndex e = members[i];
                const EdgeIndex f = members[j];
                std::int32_t far = 0;
                std::int32_t near = 0;
                for (VertexIndex w = 0; w < d.vertex_count(); ++w) {
                    if (w == u || w == v) continue;
                    (oracle.far_side(rep[static_cast<std::size_t>(w)], e, f) ? far : near) += 1;
                }
                if (far > 0 && near > 0) continue;
                Violation viol;
                viol.kind = ViolationKind::EmptyLens;
                viol.edges = {d.edge(e).id, d.edge(f).id};
                viol.both_sides_empty = far == 0 && near == 0;
                if (outer != kNone && !viol.both_sides_empty) {
                    const bool outer_far = oracle.far_side(outer, e, f);
                    const bool empty_far = far == 0;
                    viol.empty_side = outer_far == empty_far ? LensSideTag::Unbounded : LensSideTag::Bounded;
                }
                out.push_back(std::move(viol));
            }
        }
    }
    return out;
}

BranchingReport check_branching(const Drawing& d) {
    BranchingReport report;
    const std::int32_t n = d.vertex_count();
    std::vector<std::pair<std::pair<EdgeIndex, EdgeIndex>, std::int32_t>> independent;
    for (NodeIndex x = n; x < d.map().node_count(); ++x) {
        auto [e, f] = d.crossing_edges(x);
        if (e > f) std::swap(e, f);
        if (share_endpoint(d.edge(e), d.edge(f))) {
            Violation viol;
            viol.kind = ViolationKind::AdjacentCross;
            viol.edges = {d.edge(e).id, d.edge(f).id};
            viol.crossings = {x - n};
            report.violations.push_back(std::move(viol));
        } else {
            independent.push_back({{e, f}, x - n});
        }
    }
    std::sort(independent.begin(), independent.end());
    for (std::size_t i = 0; i < independent.size();) {
        std::size_t j = i;
        while (j < independent.size() && independent[j].first == independent[i].first) ++j;
        if (j - i > 1) {
            Violation viol;
            viol.kind = ViolationKind::DoubleCross;
            viol.edges = {d.edge(independent[i].first.first).id, d.edge(independent[i].first.second).id};
            for (std::size_t k = i; k < j; ++k) viol.crossings.push_back(independent[k].second);
            report.violations.push_back(std::move(viol));
        }
        i = j;
    }
    for (auto& viol : empty_lenses(d)) report.violations.push_back(std::move(viol));
    report.ok = report.violations.empty();
    return report;
}

StarSequence star_sequence(const Drawing& d, VertexId center) {
    const auto ci = d.find_vertex(center);
    if (!ci) throw std::invalid_argument("star_sequence: unknown vertex");
    std::vector<EdgeId> others;
    std::vector<char> adjacent(static_cast<std::size_t>(d.vertex_count()), 0);
    for (const Edge& e : d.edges()) {
        if ((e.u == *ci) != (e.v == *ci)) {
            adjacent[static_cast<std::size_t>(e.u == *ci ? e.v : e.u)] = 1;
        } else {
            others.push_back(e.id);
        }
    }
    const Drawing star = delete_edges(d, others);
    if (star.crossing_count() != 0) throw std::invalid_argument("star_sequence: edges at the center cross");
    const PlanarMap& map = star.map();
    const VertexIndex v = *star.find_vertex(center);

    StarSequence out;
    out.center = center;
    const auto rot = map.rotation(v);
    std::vector<std::vector<VertexId>> inserted(rot.size());
    std::vector<VertexId> loose;  // non-neighbors when the center has no edges
    for (VertexIndex w = 0; w < star.vertex_count(); ++w) {
        if (w == v) continue;
        const auto orig = d.find_vertex(star.vertex_id(w));
        if (adjacent[static_cast<std::size_t>(*orig)]) continue;
        ++out.augmented;
        if (rot.empty()) {
            loose.push_back(star.vertex_id(w));
            continue;
        }
        const FaceIndex f = star.face_containing(map.component(v), map.component(w));
        std::size_t slot = 0;
        while (slot < rot.size() && map.face(rot[slot]) != f) ++slot;
        if (slot == rot.size()) throw std::logic_error("star_sequence: no corner of the center in the host face");
        inserted[slot].push_back(star.vertex_id(w));
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
        out.symbols.push_back(star.vertex_id(map.target(rot[i])));
        for (VertexId w : inserted[i]) out.symbols.push_back(w);
    }
    for (VertexId w : loose) out.symbols.push_back(w);
    out.extended = out.symbols;
    if (!out.symbols.empty()) out.extended.push_back(out.symbols.front());
    return out;
}

bool ds2_check(const std::vector<VertexId>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1]) return false;
    std::unordered_map<VertexId, std::int32_t> index;
    for (VertexId s : seq) index.emplace(s, static_cast<std::int32_t>(index.size()));
    const auto k = index.size();
    // state[a*k+b]: length of the longest alternation a,b,a,... seen so far restricted to {a,b}.
    std::vector<std::uint8_t> state(k * k, 0);
    for (VertexId s : seq) {
        const auto x = static_cast<std::size_t>(index[s]);
        for (std::size_t y = 0; y < k; ++y) {
            if (y == x) continue;
            // Patterns starting with x: x y x y ; starting with y: y x y x.
            auto& sx = state[x * k + y];  // alternation beginning with x
            if (sx % 2 == 0) ++sx;        // expecting x at even lengths
            auto& sy = state[y * k + x];  // alternation beginning with y
            if (sy % 2 == 1) ++sy;        // expecting x at odd lengths
            if (sx >= 4 || sy >= 4) return false;
        }
    }
    return true;
}

std::int64_t ds2_max_length(std::int64_t symbols) {
    if (symbols < 1) throw std::invalid_argument("ds2_max_length: need at least one symbol");
    return 2 * symbols - 1;
}

}  // namespace branching
