#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace yfp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Formats a rational as "p" or "p/q".
std::string rational_to_string(const Rational& r);

/// Parses "p", "p/q", or a plain decimal like "0.25" / "-1.5e-2".
std::optional<Rational> parse_rational(std::string_view s);

BigInt factorial(unsigned n);

} // namespace yfp
