#pragma once

#include "branching/config.hpp"
#include "branching/drawing.hpp"
#include "branching/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace branching {

/// A lower bound that is either applicable with an exact value or
/// inapplicable because its threshold is not met.
struct BoundValue {
    bool applicable = false;
    Rational value = 0;
};

/// e^3 / (64 n^2), applicable when e > 4n.
BoundValue crossing_lemma_lb(std::int64_t n, std::int64_t e);
/// e^3 / (64 m n^2), applicable when e >= 4mn and m >= 1.
BoundValue szekely_lb(std::int64_t n, std::int64_t e, std::int64_t m);
/// max(0, e - 3n + 6); throws std::invalid_argument for n < 3.
std::int64_t simple_crossing_lb(std::int64_t n, std::int64_t e);
/// c e^3 / n^2, applicable when e > 4n.
BoundValue branching_lb(std::int64_t n, std::int64_t e, const Rational& c);
/// n(n - 2); throws std::invalid_argument for n < 3.
std::int64_t max_edges_branching(std::int64_t n);

enum class BoundKind : std::uint8_t { CrossingLower, EdgeUpper };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::CrossingLower;
    bool applicable = false;
    Rational value = 0;
    bool satisfied = false;  // meaningful only when applicable
    std::string note;
};

struct BoundCertificate {
    std::int64_t n = 0;
    std::int64_t e = 0;
    std::int64_t m = 0;
    std::int64_t crossings = 0;
    bool branching = false;
    std::vector<BoundEntry> entries;

    const BoundEntry& entry(const std::string& name) const;
    /// Every applicable entry is satisfied.
    bool all_satisfied() const;
    /// No entry applies.
    bool vacuous() const;
};

/// Evaluates every bound for the drawing's parameters. Bounds that only hold
/// for branching drawings are inapplicable when the drawing is not branching.
BoundCertificate audit(const Drawing& d, const Constants& k = {});

}  // namespace branching
