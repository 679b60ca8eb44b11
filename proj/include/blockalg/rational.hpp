#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical string form: "p/q" with q > 0 and gcd(p,q) = 1, plain "p" when q = 1.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" (decimal digits, optional leading '-'). Throws
/// std::invalid_argument on anything else, including q = 0.
inline Rat rat_from_string(const std::string& s) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("not a rational 'p' or 'p/q': '" + s + "'");
  };
  auto parse_int = [&](const std::string& t) -> Int {
    std::size_t k = 0;
    if (k < t.size() && t[k] == '-') ++k;
    if (k == t.size()) fail();
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') fail();
    return Int(t);
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) fail();
  return Rat(num, den);
}

inline Int factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int f = 1;
  for (std::int64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace blockalg
