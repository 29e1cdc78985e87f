#include "branching/bounds.hpp"

#include "branching/validate.hpp"

#include <stdexcept>

namespace branching {

namespace {

Rational cube(std::int64_t x) { return pow(make_rational(x), 3); }

}  // namespace

BoundValue crossing_lemma_lb(std::int64_t n, std::int64_t e) {
    if (!(e > 4 * n) || n <= 0) return {};
    return {true, cube(e) / (64 * make_rational(n) * n)};
}

BoundValue szekely_lb(std::int64_t n, std::int64_t e, std::int64_t m) {
    if (m < 1 || n <= 0 || !(e >= 4 * m * n)) return {};
    return {true, cube(e) / (64 * make_rational(m) * n * n)};
}

std::int64_t simple_crossing_lb(std::int64_t n, std::int64_t e) {
    if (n < 3) throw std::invalid_argument("simple_crossing_lb: n must be at least 3");
    return std::max<std::int64_t>(0, e - 3 * n + 6);
}

BoundValue branching_lb(std::int64_t n, std::int64_t e, const Rational& c) {
    if (!(e > 4 * n) || n <= 0) return {};
    return {true, c * cube(e) / (make_rational(n) * n)};
}

std::int64_t max_edges_branching(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("max_edges_branching: n must be at least 3");
    return n * (n - 2);
}

const BoundEntry& BoundCertificate::entry(const std::string& name) const {
    for (const auto& x : entries)
        if (x.name == name) return x;
    throw std::out_of_range("no bound named " + name);
}

bool BoundCertificate::all_satisfied() const {
    for (const auto& x : entries)
        if (x.applicable && !x.satisfied) return false;
    return true;
}

bool BoundCertificate::vacuous() const {
    for (const auto& x : entries)
        if (x.applicable) return false;
    return true;
}

BoundCertificate audit(const Drawing& d, const Constants& k) {
    BoundCertificate cert;
    cert.n = d.vertex_count();
    cert.e = d.edge_count();
    cert.m = d.edge_count() == 0 ? 0 : d.max_multiplicity();
    cert.crossings = d.crossing_count();
    cert.branching = !d.has_loops() && check_branching(d).ok;
    const Rational counted = make_rational(cert.crossings);

    auto lower = [&](std::string name, BoundValue v, std::string why_not) {
        BoundEntry x{std::move(name), BoundKind::CrossingLower, v.applicable, v.value, false, ""};
        if (x.applicable)
            x.satisfied = counted >= x.value;
        else
            x.note = std::move(why_not);
        cert.entries.push_back(std::move(x));
    };

    // The simple-graph lemma bounds every drawing of a graph without parallel edges.
    if (cert.m <= 1)
        lower("crossing_lemma", crossing_lemma_lb(cert.n, cert.e), "needs e > 4n");
    else
        lower("crossing_lemma", {}, "graph has parallel edges");
    lower("multiplicity_crossing_lemma", szekely_lb(cert.n, cert.e, std::max<std::int64_t>(cert.m, 1)), "needs e >= 4mn");
    if (!cert.branching) {
        lower("edge_excess", {}, "drawing is not branching");
        lower("branching_crossing", {}, "drawing is not branching");
    } else {
        if (cert.n >= 3)
            lower("edge_excess", {true, make_rational(simple_crossing_lb(cert.n, cert.e))}, "");
        else
            lower("edge_excess", {}, "needs n >= 3");
        lower("branching_crossing", branching_lb(cert.n, cert.e, k.c), "needs e > 4n");
    }

    BoundEntry cap{"edge_cap", BoundKind::EdgeUpper, false, 0, false, ""};
    if (!cert.branching) {
        cap.note = "drawing is not branching";
    } else if (cert.n < 3) {
        cap.note = "needs n >= 3";
    } else {
        cap.applicable = true;
        cap.value = make_rational(max_edges_branching(cert.n));
        cap.satisfied = make_rational(cert.e) <= cap.value;
    }
    cert.entries.push_back(std::move(cap));
    return cert;
}

}  // namespace branching
