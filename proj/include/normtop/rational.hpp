#ifndef NORMTOP_RATIONAL_HPP
#define NORMTOP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace normtop {

// Every scalar in the library is an exact rational; there is no floating
// point anywhere. cpp_rational keeps the canonical form (reduced fraction,
// positive denominator) by itself.
using Rat = boost::multiprecision::cpp_rational;
using Nat = boost::multiprecision::cpp_int;

Rat make_rat(long long num, long long den = 1);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

// Exact ceiling, as an integer.
Nat rat_ceil(const Rat& x);

// Serializes as "p/q", always with the denominator ("2/1", "-1/3").
std::string rat_string(const Rat& x);

// Accepts "p/q" or a bare integer "p". Throws InvalidArgument otherwise.
Rat parse_rat(std::string_view text);

} // namespace normtop

#endif
