#include "cli.hpp"

#include "branching/bisection.hpp"
#include "branching/bounds.hpp"
#include "branching/decomposition.hpp"
#include "branching/generators.hpp"
#include "branching/io.hpp"
#include "branching/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace branching::cli {
namespace {

using nlohmann::json;

// File missing or unreadable.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Twelve fractional digits with trailing zeros dropped: 195.3125, 0.0000001.
std::string decimal(const Rational& r) {
    std::string s = to_decimal_string(r, 12);
    if (s.find('.') == std::string::npos) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

json rational_json(const Rational& r) { return {{"exact", to_fraction_string(r)}, {"decimal", decimal(r)}}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < width.size(); ++i) {
                const std::string cell = i < r.size() ? r[i] : "";
                s += cell;
                if (i + 1 < width.size()) s += std::string(width[i] - cell.size() + 2, ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            out << s << '\n';
        };
        line(header);
        std::vector<std::string> rule;
        for (std::size_t w : width) rule.push_back(std::string(w, '-'));
        line(rule);
        for (const auto& r : rows) line(r);
    }
};

// Two-column key/value table.
Table facts(std::initializer_list<std::pair<std::string, std::string>> rows) {
    Table t{{"quantity", "value"}, {}};
    for (const auto& [k, v] : rows) t.add({k, v});
    return t;
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    RunConfig config;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream text;
    if (path == "-") {
        text << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw InputError("cannot open " + path);
        text << file.rdbuf();
    }
    return text.str();
}

void emit(Context& c, const json& report, const std::vector<Table>& tables) {
    c.out << report.dump() << "\n";
    for (const Table& t : tables) {
        c.out << "\n";
        t.print(c.out);
    }
}

json violations_json(const BranchingReport& rep) {
    json list = json::array();
    for (const Violation& v : rep.violations) {
        json entry = {{"kind", to_string(v.kind)}, {"edges", v.edges}};
        if (!v.crossings.empty()) entry["crossings"] = v.crossings;
        if (v.kind == ViolationKind::EmptyLens) {
            entry["empty_side"] = v.both_sides_empty               ? "both"
                                  : v.empty_side == LensSideTag::Bounded   ? "bounded"
                                  : v.empty_side == LensSideTag::Unbounded ? "unbounded"
                                                                           : "unclassified";
        }
        list.push_back(entry);
    }
    return list;
}

int cmd_validate(Context& c, const Drawing& d) {
    const BranchingReport rep = check_branching(d);
    json report = {{"command", "validate"}, {"n", d.vertex_count()}, {"e", d.edge_count()},
                   {"crossings", d.crossing_count()}, {"ok", rep.ok}, {"violations", violations_json(rep)}};
    Table summary = facts({{"n", std::to_string(d.vertex_count())},
                           {"e", std::to_string(d.edge_count())},
                           {"c", std::to_string(d.crossing_count())},
                           {"branching", yes_no(rep.ok)}});
    for (ViolationKind k : {ViolationKind::EmptyLens, ViolationKind::AdjacentCross, ViolationKind::DoubleCross,
                            ViolationKind::TriplePoint})
        summary.add({to_string(k), std::to_string(rep.count(k))});
    Table list{{"violation", "edges"}, {}};
    for (const Violation& v : rep.violations) {
        std::string edges;
        for (EdgeId e : v.edges) edges += (edges.empty() ? "" : " ") + std::to_string(e);
        list.add({to_string(v.kind), edges});
    }
    std::vector<Table> tables{summary};
    if (!list.rows.empty()) tables.push_back(list);
    emit(c, report, tables);
    return rep.ok ? kOk : kValidationFailure;
}

int cmd_stats(Context& c, const Drawing& d) {
    std::int32_t max_degree = 0;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) max_degree = std::max(max_degree, d.degree(v));
    const bool ok = check_branching(d).ok;
    json report = {{"command", "stats"},
                   {"n", d.vertex_count()},
                   {"e", d.edge_count()},
                   {"crossings", d.crossing_count()},
                   {"components", d.map().component_count()},
                   {"max_degree", max_degree},
                   {"degree_square_sum", degree_square_sum(d)},
                   {"max_multiplicity", d.max_multiplicity()},
                   {"loops", d.has_loops()},
                   {"branching", ok}};
    emit(c, report,
         {facts({{"n", std::to_string(d.vertex_count())},
                 {"e", std::to_string(d.edge_count())},
                 {"c", std::to_string(d.crossing_count())},
                 {"components", std::to_string(d.map().component_count())},
                 {"max degree", std::to_string(max_degree)},
                 {"sum of squared degrees", std::to_string(degree_square_sum(d))},
                 {"max multiplicity", std::to_string(d.max_multiplicity())},
                 {"loops", yes_no(d.has_loops())},
                 {"branching", yes_no(ok)}})});
    return kOk;
}

int cmd_bounds_numeric(Context& c, std::int64_t n, std::int64_t e, std::int64_t m) {
    if (n < 1 || e < 0 || m < 1) throw std::invalid_argument("bounds needs n >= 1, e >= 0, m >= 1");
    const Constants& k = c.config.constants;
    struct Row {
        std::string name;
        std::string formula;
        BoundValue value;
        std::string note;
    };
    std::vector<Row> rows{
        {"crossing_lemma", "e^3/(64 n^2)", crossing_lemma_lb(n, e), "needs e > 4n"},
        {"multiplicity_crossing_lemma", "e^3/(64 m n^2)", szekely_lb(n, e, m), "needs e >= 4mn"},
        {"edge_excess", "e - 3n + 6", n >= 3 ? BoundValue{true, make_rational(simple_crossing_lb(n, e))} : BoundValue{},
         "branching, needs n >= 3"},
        {"branching_crossing", "c e^3/n^2", branching_lb(n, e, k.c), "branching, needs e > 4n"},
        {"edge_cap", "n(n - 2)", n >= 3 ? BoundValue{true, make_rational(max_edges_branching(n))} : BoundValue{},
         "branching, edge upper bound"},
    };
    json list = json::array();
    Table t{{"bound", "formula", "applicable", "exact", "decimal", "note"}, {}};
    for (const Row& r : rows) {
        json entry = {{"name", r.name}, {"applicable", r.value.applicable}};
        if (r.value.applicable) entry["value"] = rational_json(r.value.value);
        list.push_back(entry);
        t.add({r.name, r.formula, yes_no(r.value.applicable),
               r.value.applicable ? to_fraction_string(r.value.value) : "-",
               r.value.applicable ? decimal(r.value.value) : "-", r.note});
    }
    emit(c, {{"command", "bounds"}, {"n", n}, {"e", e}, {"m", m}, {"c", rational_json(k.c)}, {"bounds", list}}, {t});
    return kOk;
}

int cmd_bounds_drawing(Context& c, const Drawing& d) {
    const BoundCertificate cert = audit(d, c.config.constants);
    json list = json::array();
    Table t{{"bound", "kind", "applicable", "exact", "decimal", "satisfied", "note"}, {}};
    for (const BoundEntry& b : cert.entries) {
        const std::string kind = b.kind == BoundKind::CrossingLower ? "crossings >=" : "edges <=";
        json entry = {{"name", b.name}, {"kind", b.kind == BoundKind::CrossingLower ? "crossing_lower" : "edge_upper"},
                      {"applicable", b.applicable}};
        if (b.applicable) {
            entry["value"] = rational_json(b.value);
            entry["satisfied"] = b.satisfied;
        }
        if (!b.note.empty()) entry["note"] = b.note;
        list.push_back(entry);
        t.add({b.name, kind, yes_no(b.applicable), b.applicable ? to_fraction_string(b.value) : "-",
               b.applicable ? decimal(b.value) : "-", b.applicable ? yes_no(b.satisfied) : "-", b.note});
    }
    json report = {{"command", "bounds"}, {"n", cert.n},     {"e", cert.e},
                   {"m", cert.m},         {"crossings", cert.crossings}, {"branching", cert.branching},
                   {"bounds", list},      {"all_satisfied", cert.all_satisfied()}};
    emit(c, report, {t});
    return cert.all_satisfied() ? kOk : kValidationFailure;
}

json ids_json(const Drawing& d) {
    json ids = json::array();
    for (VertexIndex v = 0; v < d.vertex_count(); ++v) ids.push_back(d.vertex_id(v));
    return ids;
}

int cmd_bisect(Context& c, const Drawing& d) {
    const BisectionResult r = bisect(d, c.config.constants);
    const BisectionStats& s = r.stats;
    json report = {{"command", "bisect"},
                   {"n", s.n},
                   {"crossings", s.crossings},
                   {"degree_square_sum", s.degree_square_sum},
                   {"measure", s.measure},
                   {"expansion_nodes", s.h_nodes},
                   {"separator",
                    {{"used", s.separator_used},
                     {"size", s.separator_size},
                     {"verified", s.separator_verified},
                     {"within_target", s.separator_within_target},
                     {"w_inside", rational_json(s.separator_w_inside)},
                     {"w_outside", rational_json(s.separator_w_outside)},
                     {"w_cycle", rational_json(s.separator_w_cycle)}}},
                   {"classes", {{"A", s.class_a}, {"B", s.class_b}, {"C", s.class_c}, {"type1", s.type1}}},
                   {"cut", r.cut},
                   {"cut_through_cycle", s.cut_through_cycle},
                   {"cut_minority", s.cut_minority},
                   {"repaired_a", r.repaired_a},
                   {"repaired_b", r.repaired_b},
                   {"removed", s.removed()},
                   {"bound_scale", rational_json(s.bound_scale)},
                   {"cut_bound_ok", s.cut_bound_ok},
                   {"cycle_cut_ok", s.cycle_cut_ok},
                   {"repairs_ok", s.repairs_ok},
                   {"part_a", ids_json(r.part_a)},
                   {"part_b", ids_json(r.part_b)}};
    emit(c, report,
         {facts({{"n", std::to_string(s.n)},
                 {"measure c + sum d^2 + n", std::to_string(s.measure)},
                 {"expansion nodes", std::to_string(s.h_nodes)},
                 {"separator size", s.separator_used ? std::to_string(s.separator_size) : "-"},
                 {"separator verified", s.separator_used ? yes_no(s.separator_verified) : "-"},
                 {"parts", std::to_string(r.part_a.vertex_count()) + " + " + std::to_string(r.part_b.vertex_count())},
                 {"cut edges", std::to_string(s.cut_edges)},
                 {"lens repairs", std::to_string(s.repairs_a) + " + " + std::to_string(s.repairs_b)},
                 {"cut bound", yes_no(s.cut_bound_ok)},
                 {"cycle cut bound", yes_no(s.cycle_cut_ok)},
                 {"repair bound", yes_no(s.repairs_ok)}})});
    return s.cut_bound_ok && s.repairs_ok ? kOk : kValidationFailure;
}

json trace_json(const DecompositionTrace& t) {
    json steps = json::array();
    for (const DecompositionStep& s : t.steps) {
        std::int32_t frozen = 0, repairs = 0, above = 0;
        for (const PieceRecord& p : s.pieces) {
            frozen += p.vertices < 2;
            repairs += p.repairs;
            above += !p.repairs_within_sqrt_c;
        }
        steps.push_back({{"i", s.index},
                         {"shrink_power", rational_json(s.shrink_power)},
                         {"pieces", s.pieces.size()},
                         {"frozen", frozen},
                         {"large", s.large_count},
                         {"stop", s.stop},
                         {"large_count_ok", s.large_count_ok},
                         {"sandwich_ok", s.sandwich_ok},
                         {"sqrt_sum_ok", s.sqrt_sum_ok},
                         {"deleted", s.deleted},
                         {"lens_repairs", repairs},
                         {"repairs_above_sqrt_c", above},
                         {"cumulative_deleted", s.cumulative_deleted}});
    }
    return {{"n", t.n},
            {"e", t.e},
            {"crossings", t.crossings},
            {"split_vertices", t.split.split_vertices},
            {"degree_cap", rational_json(t.split.degree_cap)},
            {"steps", steps},
            {"stop_step", t.stop_step},
            {"stop_rule_first", t.stop_rule_first},
            {"total_deleted", t.total_deleted},
            {"final_edges", t.final_edges},
            {"final_pieces", t.final_pieces.size()},
            {"final_cap_ok", t.final_cap_ok},
            {"final_small_ok", t.final_small_ok},
            {"all_ok", t.all_ok()}};
}

int cmd_decompose(Context& c, const Drawing& d) {
    const BranchingReport rep = check_branching(d);
    if (!rep.ok) {
        c.err << "input is not a branching drawing (" << rep.violations.size() << " violations)\n";
        return kValidationFailure;
    }
    const DecompositionTrace t = decompose(d, c.config.constants);
    json report = trace_json(t);
    report["command"] = "decompose";
    Table steps{{"i", "(4/5)^i", "pieces", "large", "deleted", "cumulative", "checks"}, {}};
    for (const DecompositionStep& s : t.steps) {
        const bool ok = s.large_count_ok && s.sandwich_ok && s.sqrt_sum_ok;
        steps.add({std::to_string(s.index), decimal(s.shrink_power), std::to_string(s.pieces.size()),
                   std::to_string(s.large_count), std::to_string(s.deleted), std::to_string(s.cumulative_deleted),
                   std::string(ok ? "ok" : "FAIL") + (s.stop ? " (stop)" : "")});
    }
    Table summary = facts({{"n after splitting", std::to_string(t.n)},
                           {"e", std::to_string(t.e)},
                           {"split vertices", std::to_string(t.split.split_vertices)},
                           {"stop step", std::to_string(t.stop_step)},
                           {"deleted edges", std::to_string(t.total_deleted)},
                           {"final edges", std::to_string(t.final_edges)},
                           {"final caps hold", yes_no(t.final_cap_ok)},
                           {"all checks", yes_no(t.all_ok())}});
    emit(c, report, {summary, steps});
    return t.all_ok() ? kOk : kValidationFailure;
}

int cmd_audit(Context& c, const Drawing& d) {
    const BranchingReport rep = check_branching(d);
    if (!rep.ok) {
        c.err << "input is not a branching drawing (" << rep.violations.size() << " violations)\n";
        return kValidationFailure;
    }
    const CrossingAudit a = crossing_audit(d, c.config.constants);
    json chain = json::array();
    Table t{{"step", "statement", "lhs", "rhs", "holds"}, {}};
    for (const ChainCheck& s : a.chain) {
        chain.push_back({{"id", s.id}, {"statement", s.statement}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"holds", s.holds}});
        std::ostringstream l, r;
        l << s.lhs;
        r << s.rhs;
        t.add({s.id, s.statement, l.str(), r.str(), yes_no(s.holds)});
    }
    json report = {{"command", "audit"},
                   {"n", a.n},
                   {"e", a.e},
                   {"crossings", a.crossings},
                   {"route", a.route},
                   {"edge_excess_bound", rational_json(a.edge_excess_bound)},
                   {"cubic_bound", rational_json(a.cubic_bound)},
                   {"required", rational_json(a.required)},
                   {"binding", a.binding},
                   {"satisfied", a.satisfied},
                   {"chain", chain},
                   {"contradictions", a.contradictions}};
    std::vector<Table> tables{facts({{"n", std::to_string(a.n)},
                                     {"e", std::to_string(a.e)},
                                     {"counted crossings", std::to_string(a.crossings)},
                                     {"route", a.route},
                                     {"e - 3n + 6", to_fraction_string(a.edge_excess_bound)},
                                     {"c e^3 / n^2", to_fraction_string(a.cubic_bound) + " ~ " +
                                                         decimal(a.cubic_bound)},
                                     {"binding", a.binding == "edge_excess" ? "e - 3n + 6" : "c e^3 / n^2"},
                                     {"satisfied", yes_no(a.satisfied)},
                                     {"contradictions", std::to_string(a.contradictions.size())}})};
    if (!t.rows.empty()) tables.push_back(t);
    emit(c, report, tables);
    return a.satisfied && a.contradictions.empty() ? kOk : kValidationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Branching topological multigraph toolkit", "branching-cli"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    std::optional<std::string> config_path;
    std::uint64_t seed = 0;
    std::string output;
    app.add_option("--config", config_path, "constants file (name = value lines); default $BRN_CONFIG");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--output,-o", output, "write output to this file instead of standard output");

    std::string input = "-";
    auto add_input = [&input](CLI::App* sub) { sub->add_option("input", input, "drawing file, - for standard input"); };

    CLI::App* validate = app.add_subcommand("validate", "check the branching conditions");
    add_input(validate);
    CLI::App* stats = app.add_subcommand("stats", "basic counts of a drawing");
    add_input(stats);

    CLI::App* gen = app.add_subcommand("gen", "generate a drawing");
    std::string family;
    std::int32_t gen_n = 0, gen_m = 2;
    double keep = 0.5;
    std::string blowup_input = "-";
    gen->add_option("family", family, "tight | random | blowup | tripartite")
        ->required()
        ->check(CLI::IsMember({"tight", "random", "blowup", "tripartite"}));
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--keep", keep, "edge survival probability (random)");
    gen->add_option("--m", gen_m, "copies per edge (blowup)");
    gen->add_option("--input", blowup_input, "drawing to blow up (blowup), - for standard input");

    CLI::App* import_geo = app.add_subcommand("import-geo", "planarize a geometry file");
    add_input(import_geo);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the crossing bounds");
    std::optional<std::int64_t> bn, be;
    std::int64_t bm = 1;
    bounds->add_option("--n", bn, "vertex count");
    bounds->add_option("--e", be, "edge count");
    bounds->add_option("--m", bm, "edge multiplicity");
    add_input(bounds);

    CLI::App* bisect_cmd = app.add_subcommand("bisect", "bisect a branching drawing");
    add_input(bisect_cmd);
    CLI::App* decompose_cmd = app.add_subcommand("decompose", "run and audit the decomposition");
    add_input(decompose_cmd);
    CLI::App* audit_cmd = app.add_subcommand("audit", "check the crossing lower bound and its proof chain");
    add_input(audit_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformedInput;
    }

    std::ostringstream buffer;
    std::ostream& sink = output.empty() ? out : static_cast<std::ostream&>(buffer);
    int status = kOk;
    try {
        Context c{in, sink, err, load_run_config(config_path)};
        c.config.seed = seed;
        c.config.output = output;
        auto drawing = [&] { return read_drawing(read_input(input, in)); };
        if (validate->parsed()) {
            status = cmd_validate(c, drawing());
        } else if (stats->parsed()) {
            status = cmd_stats(c, drawing());
        } else if (gen->parsed()) {
            Drawing d;
            if (family == "tight") {
                d = gen_tight(gen_n);
            } else if (family == "random") {
                d = gen_random_branching(gen_n, keep, seed);
            } else if (family == "tripartite") {
                d = gen_tripartite(gen_n);
            } else {
                d = gen_blowup(read_drawing(read_input(blowup_input, in)), gen_m).drawing;
            }
            sink << write_drawing(d);
        } else if (import_geo->parsed()) {
            try {
                sink << write_drawing(import_geometric(read_geometric(read_input(input, in))));
            } catch (const DrawingError& e) {
                throw ParseError("build", e.what());
            }
        } else if (bounds->parsed()) {
            if (bn.has_value() != be.has_value()) throw std::invalid_argument("bounds needs both --n and --e");
            status = bn ? cmd_bounds_numeric(c, *bn, *be, bm) : cmd_bounds_drawing(c, drawing());
        } else if (bisect_cmd->parsed()) {
            status = cmd_bisect(c, drawing());
        } else if (decompose_cmd->parsed()) {
            status = cmd_decompose(c, drawing());
        } else if (audit_cmd->parsed()) {
            status = cmd_audit(c, drawing());
        }
    } catch (const ParseError& e) {
        err << "malformed input at " << e.what() << "\n";
        return kMalformedInput;
    } catch (const InputError& e) {
        err << e.what() << "\n";
        return kMalformedInput;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const DrawingError& e) {
        err << "invalid drawing: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const BisectionError& e) {
        err << "bisection failed: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    if (!output.empty()) {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "cannot write " << output << "\n";
            return kMalformedInput;
        }
        file << buffer.str();
    }
    return status;
}

}  // namespace branching::cli
