#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace scatter {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "num/den" or a bare integer. Throws std::invalid_argument on junk
// or a zero denominator.
inline Rat parse_rational(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

// Lowest terms, always with an explicit denominator: "0/1", "-3/4".
inline std::string fraction_string(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rat rat_pow(const Rat& base, unsigned exp) {
  Rat acc(1), sq(base);
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1) acc *= sq;
    if (e > 1) sq *= sq;
  }
  return acc;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace scatter
