#pragma once

#include "branching/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace branching {

/// Every numeric constant used by the bounds, the bisection and the
/// decomposition audit. Defaults are the published values.
struct Constants {
    Rational c = make_rational(1, 10'000'000);   // crossing constant of the branching bound
    Rational c_sep_target = make_rational(3);    // separator size constant tried first
    Rational c_sep = make_rational(4);           // separator size constant accepted
    Rational separator_balance = make_rational(2, 3);
    Rational bisection_factor = make_rational(22);
    Rational cycle_cut_factor = make_rational(18);
    Rational deletion_factor = make_rational(350);
    Rational dense_threshold = make_rational(100'000'000);  // e > this * n triggers the decomposition route
    Rational shrink = make_rational(4, 5);
    Rational half = make_rational(1, 2);
    Rational class_threshold = make_rational(5, 6);
    Rational type_threshold = make_rational(1, 6);
    Rational part_fraction = make_rational(1, 5);

    /// Named view used by config files and reports.
    std::map<std::string, Rational*> table();
    std::map<std::string, const Rational*> table() const;
};

/// Reads "name = value" lines ('#' comments); values are exact rationals.
/// Unknown names and non-positive values are rejected with std::invalid_argument.
void apply_overrides(Constants& k, const std::string& text);

}  // namespace branching
