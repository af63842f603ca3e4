#pragma once

// Words in Z^r under GL_r(Z): the orbit of x is determined by gcd(x), and
// word measures on the cyclic groups Z/m already separate the orbits.
//
// The gcd of the zero vector is 0, standing for "infinitely divisible":
// 0 is divisible by every integer.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

using AbelianWord = IntVector;

inline std::int64_t gl_orbit_invariant(const AbelianWord& x) {
  std::int64_t d = 0;
  for (auto v : x) d = std::gcd(d, v);
  return d;
}

inline void require_same_rank(const AbelianWord& x, const AbelianWord& y) {
  if (x.size() != y.size()) {
    throw RankError("rank mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
}

inline bool same_gl_orbit(const AbelianWord& x, const AbelianWord& y) {
  require_same_rank(x, y);
  return gl_orbit_invariant(x) == gl_orbit_invariant(y);
}

// Distribution of x_1 g_1 + ... + x_r g_r on Z/m for uniform g: uniform on
// the subgroup generated by d = gcd(gcd(x), m).
inline std::vector<Rational> abelian_word_measure(const AbelianWord& x, std::int64_t m) {
  if (m < 1) throw Error("modulus must be positive");
  std::int64_t d = std::gcd(gl_orbit_invariant(x), m);
  std::vector<Rational> out(static_cast<std::size_t>(m), Rational(0));
  Rational w(d, m);
  for (std::int64_t v = 0; v < m; v += d) out[static_cast<std::size_t>(v)] = w;
  return out;
}

namespace detail {

// Exponent of p in a nonzero n.
inline std::int64_t valuation(std::int64_t n, std::int64_t p) {
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

}  // namespace detail

// Least prime power dividing exactly one of gcd(x), gcd(y); none iff the
// gcds agree. For each prime p with different valuations the least witness
// is p^(smaller valuation + 1).
inline std::optional<std::int64_t> find_distinguishing_modulus(const AbelianWord& x, const AbelianWord& y) {
  require_same_rank(x, y);
  std::int64_t a = gl_orbit_invariant(x), b = gl_orbit_invariant(y);
  if (a == b) return std::nullopt;
  std::optional<std::int64_t> best;
  for (std::int64_t p = 2; !best || p <= *best; ++p) {
    if (!detail::is_prime(p)) continue;
    bool in_a = a == 0 || a % p == 0, in_b = b == 0 || b % p == 0;
    if (!in_a && !in_b) continue;
    std::int64_t va = a == 0 ? -1 : detail::valuation(a, p);
    std::int64_t vb = b == 0 ? -1 : detail::valuation(b, p);
    if (va == vb) continue;
    std::int64_t low = va < 0 ? vb : (vb < 0 ? va : std::min(va, vb));
    std::int64_t q = 1;
    for (std::int64_t i = 0; i <= low; ++i) q *= p;
    if (!best || q < *best) best = q;
    if (a != 0 && b != 0 && p > std::max(a, b)) break;
  }
  return best;
}

inline AbelianWord parse_abelian_word(const std::string& text) {
  AbelianWord out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer in '" + text + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ParseError("expected an integer in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty exponent vector");
  return out;
}

}  // namespace wordlab
