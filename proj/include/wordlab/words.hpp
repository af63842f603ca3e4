#pragma once

// Free-group words: freely reduced sequences of signed generators.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/error.hpp"

namespace wordlab {

// A generator x_k (k >= 1) or its inverse, packed as the signed integer +-k.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : code_(sign < 0 ? -generator : generator) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int generator() const noexcept { return code_ < 0 ? -code_ : code_; }
  constexpr int sign() const noexcept { return code_ < 0 ? -1 : 1; }
  constexpr int code() const noexcept { return code_; }
  constexpr Letter inverse() const noexcept { return from_code(-code_); }

  friend constexpr bool operator==(Letter, Letter) = default;
  // Order used for canonical forms: x1 < x1^-1 < x2 < x2^-1 < ...
  friend constexpr bool operator<(Letter a, Letter b) noexcept { return a.key() < b.key(); }

 private:
  constexpr int key() const noexcept { return 2 * generator() + (code_ < 0 ? 1 : 0); }

  int code_ = 1;
};

// Exponent vector in Z^r.
using IntVector = std::vector<std::int64_t>;

class Word {
 public:
  Word() : rank_(1) {}
  explicit Word(int rank) : rank_(rank) { check_rank(rank); }

  // Freely reduces the input.
  Word(int rank, std::span<const Letter> letters) : rank_(rank) {
    check_rank(rank);
    letters_.reserve(letters.size());
    for (Letter l : letters) push_back(l);
  }

  Word(int rank, std::initializer_list<Letter> letters)
      : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  // Letters given as signed codes: {1, 2, -1, -2} is [x1,x2].
  static Word from_codes(int rank, std::span<const int> codes) {
    Word w(rank);
    for (int c : codes) w.push_back(Letter::from_code(c));
    return w;
  }
  static Word from_codes(int rank, std::initializer_list<int> codes) {
    return from_codes(rank, std::span<const int>(codes.begin(), codes.size()));
  }

  static Word generator(int rank, int k, int sign = 1) { return Word(rank, {Letter(k, sign)}); }

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Appends with free cancellation against the last letter.
  void push_back(Letter l) {
    if (l.generator() < 1 || l.generator() > rank_) {
      throw RankError("generator x" + std::to_string(l.generator()) + " exceeds rank " +
                      std::to_string(rank_));
    }
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  // Sorted distinct generator indices occurring in the word.
  std::vector<int> active_generators() const {
    std::vector<int> out;
    for (Letter l : letters_) out.push_back(l.generator());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                        b.letters_.begin(), b.letters_.end());
  }

 private:
  static void check_rank(int rank) {
    if (rank < 1) throw RankError("rank must be positive");
  }

  int rank_;
  std::vector<Letter> letters_;
};

inline void require_same_rank(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) {
    throw RankError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                    std::to_string(b.rank()));
  }
}

inline Word multiply(const Word& a, const Word& b) {
  require_same_rank(a, b);
  Word out = a;
  for (Letter l : b.letters()) out.push_back(l);
  return out;
}

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

inline Word invert(const Word& a) {
  Word out(a.rank());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) out.push_back(it->inverse());
  return out;
}

inline Word power(const Word& a, long long exponent) {
  Word base = exponent < 0 ? invert(a) : a;
  Word out(a.rank());
  for (long long i = 0; i < std::llabs(exponent); ++i) out = multiply(out, base);
  return out;
}

inline Word commutator(const Word& a, const Word& b) {
  return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

// w(g_1, ..., g_r) by left-to-right substitution.
template <typename T, typename Mult, typename Inv>
T evaluate(const Word& w, std::span<const T> images, Mult mult, Inv inv, T identity) {
  if (images.size() != static_cast<std::size_t>(w.rank())) {
    throw RankError("evaluate: expected " + std::to_string(w.rank()) + " images, got " +
                    std::to_string(images.size()));
  }
  T acc = std::move(identity);
  for (Letter l : w.letters()) {
    const T& g = images[static_cast<std::size_t>(l.generator() - 1)];
    acc = l.sign() > 0 ? mult(acc, g) : mult(acc, inv(g));
  }
  return acc;
}

template <typename T, typename Mult, typename Inv>
T evaluate(const Word& w, const std::vector<T>& images, Mult mult, Inv inv, T identity) {
  return evaluate(w, std::span<const T>(images), std::move(mult), std::move(inv),
                  std::move(identity));
}

inline IntVector abelianize(const Word& w) {
  IntVector out(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) out[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  return out;
}

inline Word cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(w.rank(), std::span<const Letter>(ls.data() + lo, hi - lo));
}

// Returns p with w = p * cyclic_reduce(w) * p^-1.
inline Word cyclic_conjugator(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(w.rank(), std::span<const Letter>(ls.data(), lo));
}

// Cyclic shift: letters [k, n) followed by [0, k). Input must be cyclically reduced.
inline Word rotate(const Word& w, std::size_t k) {
  std::vector<Letter> ls = w.letters();
  if (!ls.empty()) std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k % ls.size()), ls.end());
  return Word(w.rank(), ls);
}

// Lexicographically least rotation of the cyclic reduction: a normal form for
// the conjugacy class of w.
inline Word cyclic_normal_form(const Word& w) {
  Word c = cyclic_reduce(w);
  const auto& ls = c.letters();
  std::size_t n = ls.size(), best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = ls[(k + i) % n], b = ls[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = k;
      break;
    }
  }
  return rotate(c, best);
}

enum class SurfaceKind { orientable, nonorientable };

// s_g = [x1,x2]...[x_{2g-1},x_{2g}] and t_g = x1^2...x_g^2.
inline Word surface_word(SurfaceKind kind, int genus, int rank) {
  if (genus < 1) throw Error("surface genus must be positive");
  Word out(rank);
  if (kind == SurfaceKind::orientable) {
    if (rank < 2 * genus) throw RankError("orientable surface word s_g needs rank >= 2g");
    for (int i = 0; i < genus; ++i) {
      out = multiply(out, commutator(Word::generator(rank, 2 * i + 1), Word::generator(rank, 2 * i + 2)));
    }
  } else {
    if (rank < genus) throw RankError("nonorientable surface word t_g needs rank >= g");
    for (int i = 1; i <= genus; ++i) out = multiply(out, power(Word::generator(rank, i), 2));
  }
  return out;
}

// Freely reduced word of exactly the given length over the listed
// generators, uniform among such words.
template <typename Rng>
Word random_reduced_word(int rank, std::span<const int> generators, std::size_t length, Rng& rng) {
  if (generators.empty()) throw Error("random word needs at least one generator");
  Word out(rank);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * generators.size() - 1);
  while (out.length() < length) {
    std::size_t k = pick(rng);
    Letter l(generators[k / 2], k % 2 ? -1 : 1);
    if (!out.empty() && out.letters().back() == l.inverse()) continue;
    out.push_back(l);
  }
  return out;
}

template <typename Rng>
Word random_reduced_word(int rank, std::size_t length, Rng& rng) {
  std::vector<int> gens(static_cast<std::size_t>(rank));
  std::iota(gens.begin(), gens.end(), 1);
  return random_reduced_word(rank, gens, length, rng);
}

// Renders runs as powers: "x1^2 x2^-1". The identity is "e".
inline std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long e = static_cast<long long>(j - i) * ls[i].sign();
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(ls[i].generator());
    if (e != 1) out += '^' + std::to_string(e);
    i = j;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

namespace detail {

// Recursive-descent parser for the word grammar:
//   expr   := factor*            (juxtaposition, optional '*' or '.')
//   factor := atom ('^' int)?
//   atom   := 'x' digits | alias | 'e' | '(' expr ')' | '[' expr ',' expr ']'
// Aliases: a,b,c,d -> x1..x4 and x,y,z -> x1..x3.
class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  Word parse() {
    Word w = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("word syntax error: " + msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word expr() {
    Word w(rank_);
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '.')) {
        ++pos_;
        if (!at_factor_start()) fail("expected a factor after product sign");
      }
      if (!at_factor_start()) break;
      w = multiply(w, factor());
    }
    return w;
  }

  Word factor() {
    Word base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      long long e = integer();
      if (e == 0) fail("exponent must be nonzero");
      base = power(base, e);
    }
    return base;
  }

  long long integer() {
    skip_space();
    bool braces = pos_ < text_.size() && text_[pos_] == '{';
    if (braces) ++pos_;
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -1;
      ++pos_;
    }
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    if (braces) {
      if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return sign * v;
  }

  Word generator_word(int k) {
    if (k < 1 || k > rank_) {
      throw ParseError("generator x" + std::to_string(k) + " exceeds rank " + std::to_string(rank_), pos_);
    }
    return Word::generator(rank_, k);
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
      ++pos_;
      Word v = expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return commutator(u, v);
    }
    if (c == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      int k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + (text_[pos_] - '0');
        if (k > 100000) fail("generator index too large");
        ++pos_;
      }
      return generator_word(k);
    }
    ++pos_;
    switch (c) {
      case 'e': return Word(rank_);
      case 'a': case 'x': return generator_word(1);
      case 'b': case 'y': return generator_word(2);
      case 'c': case 'z': return generator_word(3);
      case 'd': return generator_word(4);
      default: break;
    }
    --pos_;
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw RankError("rank must be positive");
  return detail::WordParser(text, rank).parse();
}

// Smallest rank that can hold every generator mentioned in text (at least 1).
inline int infer_rank(std::string_view text) {
  int rank = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      int k = 0;
      while (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        k = k * 10 + (text[++i] - '0');
        if (k > 100000) break;
      }
      rank = std::max(rank, k);
      continue;
    }
    switch (c) {
      case 'b': case 'y': rank = std::max(rank, 2); break;
      case 'c': case 'z': rank = std::max(rank, 3); break;
      case 'd': rank = std::max(rank, 4); break;
      default: break;
    }
  }
  return rank;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
    for (Letter l : w.letters()) {
      h ^= static_cast<std::size_t>(l.code() + 0x10000) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace wordlab
