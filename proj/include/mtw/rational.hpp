#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mtw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/2", "0.25", "1e-9", "2.5e3" into an exact rational.
/// Decimal and scientific literals convert by their literal denominator
/// (0.25 -> 1/4), never through a float round-trip.
Rat parse_rational(std::string_view text);

/// Canonical form: "n" for integers, otherwise "n/d" in lowest terms with d > 0.
std::string rat_string(const Rat& q);

double rat_double(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace mtw
