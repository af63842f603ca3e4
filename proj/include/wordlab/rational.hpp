#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "wordlab/error.hpp"

namespace wordlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "p/q", also for integers ("3/1", "0/1").
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "p/q", "p" and an optional leading sign.
inline Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw ParseError("invalid rational '" + text + "'");
  }
  BigInt d(strip_plus(den));
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(BigInt(strip_plus(num)), d);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace wordlab
