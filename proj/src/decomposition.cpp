#include "branching/decomposition.hpp"

#include "branching/bounds.hpp"

#include <cmath>
#include <unordered_map>

namespace branching {

SplitResult split_high_degree(const Drawing& d) {
    const std::int64_t e = d.edge_count();
    const std::int64_t n = d.vertex_count();
    if (e == 0) throw std::invalid_argument("degree splitting needs at least one edge");
    SplitResult out;
    out.degree_cap = make_rational(2 * e, n);
    std::vector<std::vector<std::int32_t>> blocks(static_cast<std::size_t>(n));
    for (VertexIndex v = 0; v < n; ++v) {
        const std::int64_t deg = d.degree(v);
        if (deg * n <= 2 * e) continue;
        // Dart j (1-based) goes to copy ceil(j / d) = ceil(j n / 2e).
        const std::int64_t copies = (deg * n + 2 * e - 1) / (2 * e);
        auto& sizes = blocks[static_cast<std::size_t>(v)];
        sizes.assign(static_cast<std::size_t>(copies), 0);
        for (std::int64_t j = 1; j <= deg; ++j) ++sizes[static_cast<std::size_t>((j * n + 2 * e - 1) / (2 * e) - 1)];
        ++out.split_vertices;
    }
    std::vector<std::vector<VertexId>> copies;
    out.drawing = split_vertices(d, blocks, &copies);
    std::unordered_map<VertexId, VertexId> back;
    for (VertexIndex v = 0; v < n; ++v)
        for (VertexId id : copies[static_cast<std::size_t>(v)]) back.emplace(id, d.vertex_id(v));
    for (VertexIndex v = 0; v < out.drawing.vertex_count(); ++v) out.origin.push_back(back.at(out.drawing.vertex_id(v)));
    out.violations = check_branching(out.drawing).violations;
    return out;
}

std::int64_t piece_edge_cap(std::int64_t n) {
    if (n >= 3) return max_edges_branching(n);
    return n == 2 ? 1 : 0;
}

bool DecompositionTrace::all_ok() const {
    for (const auto& s : steps) {
        if (!s.large_count_ok || !s.sandwich_ok || !s.sqrt_sum_ok) return false;
        for (const auto& p : s.pieces)
            if (!p.bisection_bounds_ok) return false;
    }
    return stop_rule_first && final_cap_ok && split.violations.empty();
}

namespace {

bool stopping_rule(const Rational& power, std::int64_t e, std::int64_t n, const Constants& k) {
    return power < k.half * make_rational(e, n * n);
}

// sum sqrt(a_j) <= sqrt(m sum a_j); square roots are not rational, so this is
// evaluated in long double with a relative slack.
bool sqrt_sum_holds(const std::vector<std::int64_t>& a) {
    long double lhs = 0, sum = 0;
    for (std::int64_t x : a) {
        lhs += std::sqrt(static_cast<long double>(x));
        sum += static_cast<long double>(x);
    }
    const long double rhs = std::sqrt(static_cast<long double>(a.size()) * sum);
    return lhs <= rhs * (1 + 1e-12L) + 1e-12L;
}

}  // namespace

DecompositionTrace decompose(const Drawing& d, const Constants& k) {
    DecompositionTrace t;
    if (d.edge_count() > 0) {
        t.split = split_high_degree(d);
    } else {
        t.split.drawing = d;
        for (VertexIndex v = 0; v < d.vertex_count(); ++v) t.split.origin.push_back(d.vertex_id(v));
    }
    const Drawing& g = t.split.drawing;
    t.n = g.vertex_count();
    t.e = g.edge_count();
    t.crossings = g.crossing_count();
    const std::int64_t n = t.n;

    std::vector<Drawing> pieces{g};
    Rational power = 1;  // (4/5)^i
    for (std::int32_t i = 0;; ++i, power *= k.shrink) {
        DecompositionStep step;
        step.index = i;
        step.shrink_power = power;
        const Rational large_at = power * k.shrink * n;
        const Rational upper = power * n;
        std::vector<std::int64_t> large_crossings;
        for (const Drawing& p : pieces) {
            PieceRecord r;
            r.vertices = p.vertex_count();
            r.edges = p.edge_count();
            r.crossings = p.crossing_count();
            r.large = r.vertices >= 2 && make_rational(r.vertices) >= large_at;
            if (r.large) {
                ++step.large_count;
                large_crossings.push_back(r.crossings);
            }
            if (r.vertices > 1 && make_rational(r.vertices) > upper) step.sandwich_ok = false;
            step.pieces.push_back(r);
        }
        step.large_count_ok = make_rational(step.large_count) * pow(k.shrink, static_cast<unsigned>(i + 1)) <= 1;
        step.sqrt_sum_ok = large_crossings.empty() || sqrt_sum_holds(large_crossings);
        step.cumulative_deleted = t.total_deleted;
        if (t.e == 0 || stopping_rule(power, t.e, n, k)) {
            step.stop = true;
            t.stop_step = i;
            t.steps.push_back(std::move(step));
            break;
        }
        std::vector<Drawing> next;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
            PieceRecord& r = step.pieces[j];
            if (!r.large) {
                next.push_back(pieces[j]);
                continue;
            }
            BisectionResult b = bisect(pieces[j], k);
            r.removed = b.stats.removed();
            r.repairs = b.stats.repairs_a + b.stats.repairs_b;
            r.bisection_bounds_ok = b.stats.cut_bound_ok && (b.stats.separator_verified || !b.stats.separator_used);
            r.repairs_within_sqrt_c = b.stats.repairs_ok;
            step.deleted += r.removed;
            next.push_back(std::move(b.part_a));
            next.push_back(std::move(b.part_b));
        }
        t.total_deleted += step.deleted;
        step.cumulative_deleted = t.total_deleted;
        t.steps.push_back(std::move(step));
        pieces = std::move(next);
    }

    Rational p = 1;
    for (std::int32_t i = 0; i < t.stop_step; ++i, p *= k.shrink)
        if (stopping_rule(p, t.e, n, k)) t.stop_rule_first = false;
    for (const Drawing& piece : pieces) {
        t.final_edges += piece.edge_count();
        const std::int64_t cap = piece_edge_cap(piece.vertex_count());
        t.final_caps.push_back(cap);
        if (piece.edge_count() > cap) t.final_cap_ok = false;
        if (2 * n * piece.vertex_count() >= t.e) t.final_small_ok = false;
    }
    t.final_pieces = std::move(pieces);
    return t;
}

std::vector<ChainCheck> check_deletion_chain(const ChainInput& in, const Constants& k) {
    const double c = to_double(k.c);
    const auto e = static_cast<double>(in.e);
    const auto n = static_cast<double>(in.n);
    const double factor = to_double(k.deletion_factor);
    std::vector<ChainCheck> out;

    const double start = n > 0 ? 4 * c * e * e * e / (n * n) : 0;
    out.push_back({"start-bound", "c(G) < 4 c e^3 / n^2", static_cast<double>(in.crossings), start,
                   static_cast<double>(in.crossings) < start});

    const double b350 = factor * (2 * std::sqrt(c) * e + 3 * std::sqrt(e * n));
    out.push_back({"deletion-budget", "deleted <= 350 (2 sqrt(c) e + 3 sqrt(e n)) < e/2", static_cast<double>(in.total_deleted),
                   b350, static_cast<double>(in.total_deleted) <= b350 && b350 < e / 2});

    out.push_back({"final-edges", "e(G^k) > e/2", static_cast<double>(in.final_edges), e / 2,
                   static_cast<double>(in.final_edges) > e / 2});

    out.push_back({"edge-cap", "e(G^k) <= sum of caps < e/2", static_cast<double>(in.final_edges),
                   static_cast<double>(in.final_cap_sum),
                   in.final_edges <= in.final_cap_sum && static_cast<double>(in.final_cap_sum) < e / 2});
    return out;
}

CrossingAudit crossing_audit(const Drawing& d, const Constants& k) {
    CrossingAudit a;
    a.n = d.vertex_count();
    a.e = d.edge_count();
    a.crossings = d.crossing_count();
    a.edge_excess_bound = a.n >= 3 ? make_rational(simple_crossing_lb(a.n, a.e)) : Rational(0);
    a.cubic_bound = a.n > 0 ? k.c * pow(make_rational(a.e), 3) / (a.n * a.n) : Rational(0);
    a.binding = a.edge_excess_bound <= a.cubic_bound ? "edge_excess" : "cubic";
    a.required = std::min(a.edge_excess_bound, a.cubic_bound);
    const Rational counted = make_rational(a.crossings);
    a.satisfied = counted >= a.required;

    if (make_rational(a.e) <= k.dense_threshold * a.n) {
        a.route = "sparse";
        if (counted < a.edge_excess_bound) a.contradictions.push_back("edge_excess");
    } else {
        a.route = "dense";
        const DecompositionTrace t = decompose(d, k);
        ChainInput in{t.n, t.e, t.crossings, t.total_deleted, t.final_edges, 0};
        for (std::int64_t cap : t.final_caps) in.final_cap_sum += cap;
        a.chain = check_deletion_chain(in, k);
        // The chain is only a contradiction while its hypothesis holds.
        if (a.chain.front().holds) {
            bool broken = false;
            for (const auto& step : a.chain)
                if (!step.holds) {
                    a.contradictions.push_back(step.id);
                    broken = true;
                    break;
                }
            if (!broken) a.contradictions.push_back("chain");
        }
    }
    if (!a.satisfied) a.contradictions.push_back("required");
    return a;
}

}  // namespace branching
