#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace drg {

// Exact arbitrary-precision arithmetic.  cpp_rational keeps values reduced
// with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool is_integer(const Rat& x);

// Exact floor/ceil (round toward -inf / +inf).
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// "7", "-3/4": integers print without a denominator.
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// Accepts both "7" and "-3/4"; throws ParseError on anything else.
Rat rat_from_string(std::string_view s);

// Decimal expansion with `digits` places, rounding half away from zero.
// Used for reporting interval endpoints such as average-degree bounds.
std::string fixed_decimal(const Rat& x, int digits);

}  // namespace drg
