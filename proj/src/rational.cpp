#include "yfp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace yfp {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace {

std::optional<Rational> parse_decimal(std::string_view s) {
  // Accepts [-]ddd[.ddd][e[+-]dd]; exact conversion to a rational.
  std::string str(s);
  char* end = nullptr;
  errno = 0;
  (void)std::strtod(str.c_str(), &end);
  if (errno != 0 || end != str.c_str() + str.size() || str.empty()) return std::nullopt;

  bool neg = false;
  std::size_t i = 0;
  if (str[i] == '+' || str[i] == '-') neg = (str[i++] == '-');
  BigInt mantissa = 0;
  long frac_digits = 0;
  long exp10 = 0;
  bool seen_dot = false;
  for (; i < str.size(); ++i) {
    char c = str[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
    } else if (c == '.') {
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      exp10 = std::strtol(str.c_str() + i + 1, nullptr, 10);
      break;
    } else {
      return std::nullopt;
    }
  }
  Rational r(mantissa);
  long shift = exp10 - frac_digits;
  BigInt p10 = 1;
  for (long k = 0; k < std::labs(shift); ++k) p10 *= 10;
  if (shift >= 0)
    r *= Rational(p10);
  else
    r /= Rational(p10);
  return neg ? -r : r;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    // Integer fast path, otherwise decimal.
    bool all_int = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (i == 0 && (c == '+' || c == '-')) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) { all_int = false; break; }
    }
    if (all_int && !(s.size() == 1 && (s[0] == '+' || s[0] == '-'))) {
      try {
        return Rational(BigInt(std::string(s)));
      } catch (...) {
        return std::nullopt;
      }
    }
    return parse_decimal(s);
  }
  auto num = parse_rational(s.substr(0, slash));
  auto den = parse_rational(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return *num / *den;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

} // namespace yfp
