#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ortholat {

// Exact rational arithmetic for membership grades and negation parameters.
// Every structural check in the engine compares rationals exactly; floating
// point appears only behind the Yager approximation (see negation.hpp).
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "num/den", "num", or a decimal like "0.25". Throws errc::parse_error.
Rat parse_rat(const std::string& text);

// Canonical "num/den" form; integers print without the denominator.
std::string rat_str(const Rat& value);

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// Grade = rational confined to [0,1]. Throws errc::out_of_range.
Rat make_grade(const Rat& value);

bool is_grade(const Rat& value);

}  // namespace ortholat
