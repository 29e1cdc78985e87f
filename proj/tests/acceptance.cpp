// Acceptance suite: one PASS/FAIL line per criterion. Budgets and tolerances
// are fixed below; the exit status is the number of failed criteria.

#include "cli.hpp"

#include "branching/bisection.hpp"
#include "branching/bounds.hpp"
#include "branching/decomposition.hpp"
#include "branching/generators.hpp"
#include "branching/geometric.hpp"
#include "branching/io.hpp"
#include "branching/separator.hpp"
#include "branching/validate.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace branching {
namespace {

constexpr double kTightBudget = 1.0;        // seconds, criterion 1
constexpr double kEdgeCapBudget = 10.0;     // criterion 2
constexpr double kSeparatorBudget = 30.0;   // criterion 5
constexpr double kBisectBudget = 120.0;     // criterion 6
constexpr int kFuzzCount = 200;             // criterion 2
constexpr int kBlowupCount = 20;            // criterion 4
constexpr int kPlanarizedCount = 50;        // criterion 5
constexpr int kMaxGrid = 100;               // criterion 5
constexpr int kRandomBisections = 100;      // criteria 6 and 7

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

// ---------------------------------------------------------------- corpora

// Random sub-drawings of tight constructions.
std::vector<Drawing> tight_subdrawings(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Drawing> out;
    for (int i = 0; i < count; ++i) {
        const auto n = static_cast<std::int32_t>(4 + rng() % 17);
        const double keep = 0.2 + 0.75 * static_cast<double>(rng() % 1000) / 1000.0;
        out.push_back(gen_random_branching(n, keep, rng()));
    }
    return out;
}

// Planarized straight-line drawings.
std::vector<Drawing> geometric_imports(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Drawing> out;
    for (int i = 0; i < count; ++i) {
        const auto n = static_cast<std::int32_t>(4 + rng() % 17);
        const double p = 0.15 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
        out.push_back(import_geometric(random_straight_line(n, p, rng())));
    }
    return out;
}

std::vector<Drawing> fuzz_corpus() {
    std::vector<Drawing> out = tight_subdrawings(kFuzzCount / 2, 11);
    for (Drawing& d : geometric_imports(kFuzzCount - kFuzzCount / 2, 12)) out.push_back(std::move(d));
    return out;
}

std::vector<Drawing> bisection_corpus() {
    std::vector<Drawing> out;
    for (std::int32_t n = 10; n <= 30; ++n) out.push_back(gen_tight(n));
    std::mt19937_64 rng(21);
    for (int i = 0; i < kRandomBisections; ++i) {
        const auto n = static_cast<std::int32_t>(10 + rng() % 16);
        const double keep = 0.3 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
        out.push_back(gen_random_branching(n, keep, rng()));
    }
    return out;
}

// Deletes one edge (the later one in edge order) at every crossing.
Drawing crossing_free_part(const Drawing& d) {
    std::set<EdgeId> drop;
    for (NodeIndex x = d.vertex_count(); x < d.map().node_count(); ++x) {
        const auto [a, b] = d.crossing_edges(x);
        const EdgeId ia = d.edge(a).id, ib = d.edge(b).id;
        if (!drop.contains(ia) && !drop.contains(ib)) drop.insert(std::max(ia, ib));
    }
    const std::vector<EdgeId> list(drop.begin(), drop.end());
    return delete_edges(d, list);
}

// ---------------------------------------------------------------- criteria

Outcome tight_construction() {
    Outcome o;
    const auto t0 = Clock::now();
    for (std::int32_t n = 3; n <= 40; ++n) {
        const Drawing d = gen_tight(n);
        o.check(d.vertex_count() == n && d.edge_count() == n * (n - 2), "n=" + std::to_string(n) + " edge count");
        for (VertexIndex v = 0; v < n; ++v)
            o.check(d.degree(v) == 2 * n - 4, "n=" + std::to_string(n) + " degree of " + std::to_string(v));
        o.check(check_branching(d).ok, "n=" + std::to_string(n) + " rejected by the validator");
    }
    const double t = seconds_since(t0);
    o.check(t < kTightBudget, "runtime");
    std::ostringstream s;
    s << "n = 3..40, " << t << " s (budget " << kTightBudget << " s)";
    o.detail = s.str();
    return o;
}

// Reference Davenport-Schinzel search, independent of ds2_check.
bool ds2_pattern_free(const std::vector<VertexId>& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[j] == s[i]) continue;
            for (std::size_t k = j + 1; k < s.size(); ++k) {
                if (s[k] != s[i]) continue;
                for (std::size_t l = k + 1; l < s.size(); ++l)
                    if (s[l] == s[j]) return false;
            }
        }
    return true;
}

std::size_t longest_ds2(int symbols) {
    std::vector<VertexId> seq;
    std::size_t best = 0;
    std::function<void(int)> grow = [&](int used) {
        best = std::max(best, seq.size());
        for (int x = 0; x < std::min(used + 1, symbols); ++x) {
            seq.push_back(x);
            if (ds2_pattern_free(seq)) grow(std::max(used, x + 1));
            seq.pop_back();
        }
    };
    grow(0);
    return best;
}

Outcome edge_cap() {
    Outcome o;
    const auto t0 = Clock::now();
    const std::vector<Drawing> corpus = fuzz_corpus();
    std::int64_t sequences = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Drawing& d = corpus[i];
        const std::string tag = "drawing " + std::to_string(i);
        const std::int64_t n = d.vertex_count();
        o.check(check_branching(d).ok, tag + " not branching");
        o.check(d.edge_count() <= n * (n - 2), tag + " exceeds n(n-2)");
        for (VertexIndex v = 0; v < n; ++v) {
            const StarSequence s = star_sequence(d, d.vertex_id(v));
            ++sequences;
            o.check(ds2_check(s.extended), tag + " star sequence fails the DS-2 check");
            o.check(static_cast<std::int64_t>(s.extended.size()) <= 2 * n - 3, tag + " star sequence too long");
        }
    }
    for (int s = 1; s <= 6; ++s)
        o.check(static_cast<std::int64_t>(longest_ds2(s)) == 2 * s - 1, "exhaustive DS-2 length for s=" + std::to_string(s));
    const double t = seconds_since(t0);
    o.check(t < kEdgeCapBudget, "runtime");
    std::ostringstream s;
    s << corpus.size() << " drawings, " << sequences << " star sequences, DS-2 exhaustive s <= 6, " << t << " s (budget "
      << kEdgeCapBudget << " s)";
    o.detail = s.str();
    return o;
}

Outcome edge_excess() {
    Outcome o;
    std::vector<Drawing> corpus = fuzz_corpus();
    for (std::int32_t n = 3; n <= 20; ++n) corpus.push_back(gen_tight(n));
    std::int64_t plane = 0, checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Drawing& d = corpus[i];
        const std::int64_t n = d.vertex_count(), e = d.edge_count();
        if (n < 3 || !check_branching(d).ok) continue;
        ++checked;
        o.check(d.crossing_count() >= e - 3 * n + 6, "drawing " + std::to_string(i) + " has fewer than e-3n+6 crossings");
        const Drawing free = crossing_free_part(d);
        o.check(free.crossing_count() == 0 && check_branching(free).ok, "drawing " + std::to_string(i) + " crossing-free part");
        o.check(free.edge_count() <= 3 * n - 6, "drawing " + std::to_string(i) + " crossing-free part exceeds 3n-6");
        ++plane;
    }
    o.detail = std::to_string(checked) + " branching drawings, " + std::to_string(plane) +
               " crossing-free parts, exact integers";
    return o;
}

Outcome blowup_law() {
    Outcome o;
    std::mt19937_64 rng(41);
    int used = 0;
    while (used < kBlowupCount) {
        const auto n = static_cast<std::int32_t>(4 + rng() % 10);
        const Drawing d = import_geometric(random_straight_line(n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng()));
        if (d.max_multiplicity() > 1 || d.has_loops()) continue;
        ++used;
        for (std::int32_t m : {1, 2, 3, 5}) {
            const Drawing b = gen_blowup(d, m).drawing;
            o.check(static_cast<std::int64_t>(b.crossing_count()) == std::int64_t{m} * m * d.crossing_count(),
                    "drawing " + std::to_string(used) + " m=" + std::to_string(m));
            o.check(b.edge_count() == m * d.edge_count(), "edge count, m=" + std::to_string(m));
        }
    }
    o.detail = std::to_string(used) + " drawings, m in {1, 2, 3, 5}, exact";
    return o;
}

WeightInput uniform(PlanarMap map) {
    WeightInput w{std::move(map), {}};
    w.weight.assign(static_cast<std::size_t>(w.map.node_count()), Rational(1));
    return w;
}

// Exact balance 3 w(side) <= 2 W recomputed from the node lists.
bool balanced(const WeightInput& w, const SeparatorCycle& s) {
    Rational total = 0, in = 0, out = 0;
    for (const Rational& x : w.weight) total += x;
    for (NodeIndex v : s.inside) in += w.weight[static_cast<std::size_t>(v)];
    for (NodeIndex v : s.outside) out += w.weight[static_cast<std::size_t>(v)];
    return 3 * in <= 2 * total && 3 * out <= 2 * total;
}

Outcome separator_contract() {
    Outcome o;
    const auto t0 = Clock::now();
    std::int32_t instances = 0, pass4 = 0, pass3 = 0;
    auto run = [&](const WeightInput& w, const std::string& tag) {
        ++instances;
        const SeparatorCycle s = cycle_separator(w, 3);
        std::string why;
        const bool ok4 = verify_separator(w, s, 4, &why);
        o.check(ok4, tag + ": " + why);
        o.check(balanced(w, s), tag + ": balance");
        pass4 += ok4;
        pass3 += ok4 && verify_separator(w, s, 3);
    };
    for (std::int32_t k = 2; k <= kMaxGrid; ++k) run(uniform(triangulate(grid_map(k))), "grid " + std::to_string(k));
    std::vector<Drawing> drawings = geometric_imports(kPlanarizedCount / 2, 51);
    for (Drawing& d : tight_subdrawings(kPlanarizedCount - kPlanarizedCount / 2, 52)) drawings.push_back(std::move(d));
    for (std::size_t i = 0; i < drawings.size(); ++i) {
        WeightInput w{triangulate(connected_map(drawings[i])), {}};
        for (NodeIndex v = 0; v < w.map.node_count(); ++v)
            w.weight.push_back(w.map.kind(v) == NodeKind::Real ? Rational(1) : Rational(0));
        run(w, "planarized " + std::to_string(i));
    }
    const double t = seconds_since(t0);
    o.check(t < kSeparatorBudget, "runtime");
    std::ostringstream s;
    s << instances << " instances (grids k = 2.." << kMaxGrid << ", " << drawings.size()
      << " planarized); c_sep = 4: " << pass4 << "/" << instances << "; c_sep = 3: " << pass3 << "/" << instances
      << " (" << 100.0 * pass3 / instances << "%); " << t << " s (budget " << kSeparatorBudget << " s)";
    o.detail = s.str();
    return o;
}

Outcome bisection_end_to_end(const std::vector<Drawing>& corpus) {
    Outcome o;
    const Constants k;
    const auto t0 = Clock::now();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Drawing& d = corpus[i];
        const std::string tag = "drawing " + std::to_string(i);
        BisectionResult r;
        try {
            r = bisect(d, k);
        } catch (const std::exception& e) {
            o.check(false, tag + ": " + e.what());
            continue;
        }
        const std::int64_t n = d.vertex_count(), a = r.part_a.vertex_count(), b = r.part_b.vertex_count();
        o.check(a + b == n && 5 * a >= n && 5 * a <= 4 * n && 5 * b >= n && 5 * b <= 4 * n, tag + ": part sizes");
        o.check(check_branching(r.part_a).ok && check_branching(r.part_b).ok, tag + ": part not branching");
        // Cut edges recounted from the vertex split.
        std::set<VertexId> side_a;
        for (VertexIndex v = 0; v < r.part_a.vertex_count(); ++v) side_a.insert(r.part_a.vertex_id(v));
        std::int64_t cut = 0;
        for (const Edge& e : d.edges()) cut += side_a.contains(d.vertex_id(e.u)) != side_a.contains(d.vertex_id(e.v));
        o.check(cut == static_cast<std::int64_t>(r.cut.size()), tag + ": cut list");
        const Rational measure = make_rational(d.crossing_count() + degree_square_sum(d) + n);
        const Rational scale = std::max(Rational(1), Rational(k.c_sep / 3));
        o.check(le_scaled_sqrt(make_rational(cut), 22 * scale, measure), tag + ": cut above 22 (c_sep/3) sqrt(c + sum d^2 + n)");
        const Rational c = make_rational(d.crossing_count());
        o.check(le_scaled_sqrt(make_rational(static_cast<std::int64_t>(r.repaired_a.size())), 2, c) &&
                    le_scaled_sqrt(make_rational(static_cast<std::int64_t>(r.repaired_b.size())), 2, c),
                tag + ": lens repairs above 2 sqrt(c)");
    }
    const double t = seconds_since(t0);
    o.check(t < kBisectBudget, "runtime");
    std::ostringstream s;
    s << corpus.size() << " drawings (tight 10..30 + " << kRandomBisections << " random), " << t << " s (budget "
      << kBisectBudget << " s)";
    o.detail = s.str();
    return o;
}

Outcome decomposition_audit(const std::vector<Drawing>& corpus) {
    Outcome o;
    const Constants k;
    std::int64_t steps = 0, bisections = 0, above_sqrt_c = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Drawing& d = corpus[i];
        const std::string tag = "drawing " + std::to_string(i);
        DecompositionTrace t;
        try {
            t = decompose(d, k);
        } catch (const std::exception& e) {
            o.check(false, tag + ": " + e.what());
            continue;
        }
        // Stopping index recomputed: first i with (4/5)^i < e/(2n^2).
        std::int32_t first = 0;
        Rational p = 1;
        const Rational threshold = make_rational(t.e, 2 * std::int64_t{t.n} * t.n);
        while (!(p < threshold)) {
            p *= make_rational(4, 5);
            ++first;
        }
        o.check(t.stop_step == first, tag + ": stopping rule fired at " + std::to_string(t.stop_step) + ", expected " +
                                          std::to_string(first));
        Rational growth = make_rational(5, 4);
        for (const DecompositionStep& s : t.steps) {
            ++steps;
            std::int32_t large = 0;
            for (const PieceRecord& r : s.pieces) large += r.large;
            o.check(large == s.large_count && make_rational(large) <= growth, tag + ": m_i above (5/4)^{i+1}");
            growth *= make_rational(5, 4);
        }
        for (const Drawing& piece : t.final_pieces)
            o.check(piece.edge_count() <= piece_edge_cap(piece.vertex_count()), tag + ": final piece above its edge cap");
        o.check(t.all_ok(), tag + ": trace flags");
        for (const DecompositionStep& s : t.steps)
            for (const PieceRecord& r : s.pieces) {
                bisections += r.large && !s.stop;
                above_sqrt_c += !r.repairs_within_sqrt_c;
            }
        const CrossingAudit a = crossing_audit(d, k);
        const std::int64_t n = d.vertex_count(), e = d.edge_count();
        const Rational excess = n >= 3 ? make_rational(e - 3 * n + 6) : Rational(0);
        const Rational cubic = k.c * e * e * e / (n * n);
        o.check(make_rational(d.crossing_count()) >= std::min(excess, cubic), tag + ": crossings below the bound");
        o.check(a.satisfied && a.contradictions.empty(), tag + ": audit contradictions");
    }
    // Lens repairs above 2 sqrt(c) inside sub-bisections are reported, not
    // gated: the deletion bound the decomposition relies on is the 22 bound.
    o.detail = std::to_string(corpus.size()) + " traces, " + std::to_string(steps) + " steps, " +
               std::to_string(bisections) + " sub-bisections (" + std::to_string(above_sqrt_c) +
               " with lens repairs above 2 sqrt(c))";
    return o;
}

Outcome tripartite_counterexample() {
    Outcome o;
    for (std::int32_t n : {6, 9}) {
        const std::string tag = "n=" + std::to_string(n);
        const Drawing d = gen_tripartite(n);
        const std::int64_t e = d.edge_count(), third = n / 3;
        o.check(e == third * third * third, tag + ": edge count");
        const BranchingReport r = check_branching(d);
        o.check(!r.ok && r.count(ViolationKind::DoubleCross) > 0, tag + ": not rejected for double crossings");
        o.check(d.crossing_count() <= e * (e - 1), tag + ": more than 2 C(e, 2) crossings");
    }
    o.detail = "n in {6, 9}";
    return o;
}

struct CliRun {
    int status;
    std::string out;
};

CliRun cli_run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = cli::run(args, in, out, err);
    return {status, out.str()};
}

Outcome round_trip_and_determinism(const std::vector<Drawing>& bisection) {
    Outcome o;
    std::vector<Drawing> corpus = fuzz_corpus();
    for (const Drawing& d : bisection) corpus.push_back(d);
    for (std::int32_t n = 3; n <= 40; ++n) corpus.push_back(gen_tight(n));
    corpus.push_back(gen_tripartite(6));
    corpus.push_back(gen_tripartite(9));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const std::string text = write_drawing(corpus[i]);
        try {
            const Drawing back = read_drawing(text);
            o.check(isomorphic(corpus[i], back), "drawing " + std::to_string(i) + ": not isomorphic");
            o.check(write_drawing(back) == text, "drawing " + std::to_string(i) + ": serialization not stable");
        } catch (const std::exception& e) {
            o.check(false, "drawing " + std::to_string(i) + ": " + e.what());
        }
    }
    std::int32_t reports = 0;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const std::vector<std::string> gen = {"--seed", std::to_string(seed), "gen", "random", "--n", "14", "--keep", "0.6"};
        const CliRun a = cli_run(gen), b = cli_run(gen);
        o.check(a.status == 0 && a.out == b.out, "gen random not byte-identical for seed " + std::to_string(seed));
        for (const char* cmd : {"validate", "stats", "bounds", "bisect", "decompose", "audit"}) {
            const CliRun x = cli_run({cmd}, a.out), y = cli_run({cmd}, a.out);
            ++reports;
            o.check(x.status == y.status && x.out == y.out,
                    std::string(cmd) + " report not byte-identical for seed " + std::to_string(seed));
        }
    }
    o.detail = std::to_string(corpus.size()) + " drawings round-tripped, " + std::to_string(reports) +
               " reports compared byte for byte";
    return o;
}

}  // namespace
}  // namespace branching

int main() {
    using namespace branching;
    const std::vector<Drawing> bisection = bisection_corpus();
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"tight construction", tight_construction},
        {"edge cap and star sequences", edge_cap},
        {"edge excess bound", edge_excess},
        {"blow-up law", blowup_law},
        {"separator contract", separator_contract},
        {"bisection end to end", [&] { return bisection_end_to_end(bisection); }},
        {"decomposition audit", [&] { return decomposition_audit(bisection); }},
        {"tripartite counterexample", tripartite_counterexample},
        {"round trip and determinism", [&] { return round_trip_and_determinism(bisection); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].name << " - "
                  << o.detail << "\n";
        for (const std::string& f : o.failures) std::cout << "      " << f << "\n";
        std::cout.flush();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed;
}
