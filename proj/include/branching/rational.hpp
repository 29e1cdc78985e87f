#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace branching {

/// Exact rational used for every bound, weight and audited inequality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// num/den with den != 0. The sign is moved to the numerator first: the
/// two-argument constructor of this Boost version rejects negative denominators.
inline Rational make_ratio(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_ratio(BigInt(num), BigInt(den));
}

/// Parses "a", "a/b", or a finite decimal "1.25" / "1e-7" exactly.
Rational parse_rational(const std::string& text);

/// "a/b" (or "a" when the denominator is 1).
std::string to_fraction_string(const Rational& value);

/// Fixed decimal approximation with `digits` fractional digits (round half away from zero).
std::string to_decimal_string(const Rational& value, int digits = 6);

double to_double(const Rational& value);

/// floor(sqrt(x)) for x >= 0.
BigInt isqrt_floor(const Rational& x);

/// Exact test  lhs <= k * sqrt(x)  for lhs >= 0, k >= 0, x >= 0.
bool le_scaled_sqrt(const Rational& lhs, const Rational& k, const Rational& x);

/// Exact test  lhs < k * sqrt(x).
bool lt_scaled_sqrt(const Rational& lhs, const Rational& k, const Rational& x);

/// r^k for integer k >= 0.
Rational pow(const Rational& base, unsigned k);

}  // namespace branching
