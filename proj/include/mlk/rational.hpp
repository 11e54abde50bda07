#pragma once

// Exact scalar arithmetic. Everything in this library is computed over Q with
// arbitrary-precision integers; there is no floating-point representation
// anywhere, so every comparison is exact value equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "mlk/errors.hpp"

namespace mlk {

// Canonical form (lowest terms, positive denominator) is maintained by the
// backend after every operation.
using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

inline Z numerator_of(const Q& q) { return boost::multiprecision::numerator(q); }
inline Z denominator_of(const Q& q) { return boost::multiprecision::denominator(q); }

// Accepts "p" or "p/q" with an optional leading sign on p; q must be a
// positive integer literal. Anything else (floats, whitespace, empty parts)
// is rejected.
inline Q parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("invalid rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') { ++pos; ++digits; }
  if (digits == 0) fail();
  Z num(std::string(text.substr(0, pos)));
  if (pos == text.size()) return Q(num);
  if (text[pos] != '/') fail();
  ++pos;
  std::size_t den_start = pos, den_digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') { ++pos; ++den_digits; }
  if (den_digits == 0 || pos != text.size()) fail();
  Z den(std::string(text.substr(den_start)));
  if (den == 0) throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
  return Q(num, den);
}

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Q& q) {
  Z den = denominator_of(q);
  std::string s = numerator_of(q).str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

}  // namespace mlk
