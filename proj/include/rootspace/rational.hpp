#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74 mixed comparisons recurse under C++20 reversed operator lookup;
// exact-match overloads take precedence over the templates.
namespace boost {
inline bool operator==(int a, const rational<std::int64_t>& b) { return b == rational<std::int64_t>(a); }
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b) { return b == rational<std::int64_t>(a); }
}  // namespace boost

namespace rootspace {

using Rational = boost::rational<std::int64_t>;
using RationalVec = std::vector<Rational>;

/// Canonical text form "p/q" with gcd(p,q)=1 and q>0.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws Error(Parse) with the offending position.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "1,-1/2".
RationalVec parse_rational_list(std::string_view text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }
inline bool is_nonneg_integer(const Rational& r) { return is_integer(r) && r.numerator() >= 0; }

}  // namespace rootspace
