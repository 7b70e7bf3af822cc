#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>
#include <vector>

// Boost 1.74 defines rational == integer through a reversed call that C++20
// rewrites back into itself. Exact-match overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long long>& a, int b) { return a == static_cast<long long>(b); }
} // namespace boost

namespace alcove {

using Rational = boost::rational<long long>;

/// Point of the real span of the coweight lattice, in simple-coroot coordinates.
using RationalPoint = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p" and "p/q"; throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

/// Largest integer <= q.
long long floor(const Rational& q);

RationalPoint to_rational(const std::vector<long long>& v);

} // namespace alcove
