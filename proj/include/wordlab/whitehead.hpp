#pragma once

// Whitehead automorphisms, cyclic-length minimization, primitivity and the
// Aut(F_r)-orbit decision for words.
//
// Type I: signed permutations of the generators. Type II: for a multiplier
// letter a = x_k^(+-1), every other generator x is sent to one of
//   x, x a, a^-1 x, a^-1 x a
// while x_k is fixed. A cyclic word that is not of minimal length in its orbit
// is shortened by some Type II automorphism, and two minimal words in the same
// orbit are joined by a chain of Whitehead automorphisms that never changes the
// length. Orbits are unions of conjugacy classes (inner automorphisms belong to
// Aut(F_r)), so working with cyclic words decides the orbit problem itself.

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordlab/automorphisms.hpp"
#include "wordlab/error.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

inline constexpr int kWhiteheadMaxRank = 5;
inline constexpr std::size_t kWhiteheadMaxLength = 24;
inline constexpr std::size_t kWhiteheadMaxStates = 2'000'000;

class WhiteheadAutomorphism {
 public:
  enum class Kind { type_i, type_ii };
  enum class Choice : int { fix = 0, right = 1, left_inverse = 2, conjugate = 3 };

  static WhiteheadAutomorphism type_i(std::vector<int> perm, std::vector<bool> inverted) {
    WhiteheadAutomorphism a;
    a.kind_ = Kind::type_i;
    a.rank_ = static_cast<int>(perm.size());
    a.perm_ = std::move(perm);
    a.inverted_ = std::move(inverted);
    return a;
  }

  static WhiteheadAutomorphism type_ii(int rank, Letter multiplier, std::vector<Choice> choices) {
    if (choices[static_cast<std::size_t>(multiplier.generator() - 1)] != Choice::fix) {
      throw Error("Type II Whitehead automorphism must fix its multiplier's generator");
    }
    WhiteheadAutomorphism a;
    a.kind_ = Kind::type_ii;
    a.rank_ = rank;
    a.multiplier_ = multiplier;
    a.choices_ = std::move(choices);
    return a;
  }

  Kind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  Letter multiplier() const noexcept { return multiplier_; }
  const std::vector<Choice>& choices() const noexcept { return choices_; }

  Endomorphism endomorphism() const {
    std::vector<Word> im;
    if (kind_ == Kind::type_i) {
      for (int i = 0; i < rank_; ++i) {
        im.push_back(Word::generator(rank_, perm_[static_cast<std::size_t>(i)] + 1,
                                     inverted_[static_cast<std::size_t>(i)] ? -1 : 1));
      }
      return Endomorphism(std::move(im));
    }
    Word a(rank_, {multiplier_});
    Word ai(rank_, {multiplier_.inverse()});
    for (int i = 0; i < rank_; ++i) {
      Word x = Word::generator(rank_, i + 1);
      switch (choices_[static_cast<std::size_t>(i)]) {
        case Choice::fix: im.push_back(x); break;
        case Choice::right: im.push_back(x * a); break;
        case Choice::left_inverse: im.push_back(ai * x); break;
        case Choice::conjugate: im.push_back(ai * x * a); break;
      }
    }
    return Endomorphism(std::move(im));
  }

  WhiteheadAutomorphism inverse() const {
    if (kind_ == Kind::type_ii) {
      return type_ii(rank_, multiplier_.inverse(), choices_);
    }
    std::vector<int> perm(perm_.size());
    std::vector<bool> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      perm[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
      inv[static_cast<std::size_t>(perm_[i])] = inverted_[i];
    }
    return type_i(std::move(perm), std::move(inv));
  }

  std::string to_string() const {
    std::string s;
    if (kind_ == Kind::type_i) {
      s = "I(";
      for (int i = 0; i < rank_; ++i) {
        if (i) s += ',';
        s += 'x' + std::to_string(perm_[static_cast<std::size_t>(i)] + 1);
        if (inverted_[static_cast<std::size_t>(i)]) s += "^-1";
      }
      return s + ")";
    }
    static constexpr const char* kTag[] = {"fix", "right", "left_inv", "conj"};
    s = "II(a=x" + std::to_string(multiplier_.generator()) + (multiplier_.sign() < 0 ? "^-1" : "");
    for (int i = 0; i < rank_; ++i) {
      if (i + 1 == multiplier_.generator()) continue;
      s += ";x" + std::to_string(i + 1) + ":" + kTag[static_cast<int>(choices_[static_cast<std::size_t>(i)])];
    }
    return s + ")";
  }

  friend bool operator==(const WhiteheadAutomorphism&, const WhiteheadAutomorphism&) = default;

 private:
  Kind kind_ = Kind::type_i;
  int rank_ = 0;
  std::vector<int> perm_;
  std::vector<bool> inverted_;
  Letter multiplier_;
  std::vector<Choice> choices_;
};

// All nontrivial Whitehead automorphisms of rank r, in increasing encoding
// order: Type I before Type II; Type I by (permutation, inversion mask); Type II
// by (multiplier x1 < x1^-1 < x2 < ..., choice vector read as base-4 number).
struct WhiteheadEntry {
  WhiteheadAutomorphism automorphism;
  Endomorphism map;
};

inline const std::vector<WhiteheadEntry>& whitehead_automorphisms(int rank) {
  if (rank < 1 || rank > kWhiteheadMaxRank) {
    throw BudgetError("Whitehead enumeration supports rank 1.." + std::to_string(kWhiteheadMaxRank));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<WhiteheadEntry>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  std::vector<WhiteheadEntry> out;
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      bool identity = mask == 0 && std::is_sorted(perm.begin(), perm.end());
      if (identity) continue;
      std::vector<bool> inv(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) inv[static_cast<std::size_t>(i)] = (mask >> (rank - 1 - i)) & 1u;
      auto a = WhiteheadAutomorphism::type_i(perm, inv);
      out.push_back({a, a.endomorphism()});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int k = 1; k <= rank; ++k) {
    for (int sign : {1, -1}) {
      Letter mult(k, sign);
      std::size_t combos = 1;
      for (int i = 1; i < rank; ++i) combos *= 4;
      for (std::size_t code = 1; code < combos; ++code) {
        std::vector<WhiteheadAutomorphism::Choice> ch(static_cast<std::size_t>(rank),
                                                      WhiteheadAutomorphism::Choice::fix);
        std::size_t rest = code;
        // Most significant digit belongs to the lowest-index free generator.
        for (int i = rank; i-- > 0;) {
          if (i + 1 == k) continue;
          ch[static_cast<std::size_t>(i)] = static_cast<WhiteheadAutomorphism::Choice>(rest % 4);
          rest /= 4;
        }
        auto a = WhiteheadAutomorphism::type_ii(rank, mult, std::move(ch));
        out.push_back({a, a.endomorphism()});
      }
    }
  }
  return cache.emplace(rank, std::move(out)).first->second;
}

inline void check_whitehead_limits(const Word& w) {
  if (w.rank() > kWhiteheadMaxRank) {
    throw BudgetError("Whitehead algorithm limited to rank <= " + std::to_string(kWhiteheadMaxRank));
  }
  if (w.length() > kWhiteheadMaxLength) {
    throw BudgetError("Whitehead algorithm limited to word length <= " + std::to_string(kWhiteheadMaxLength));
  }
}

struct MinimizationResult {
  Word word;  // cyclically reduced, of minimal length in the orbit
  std::vector<WhiteheadAutomorphism> trace;
};

// Greedy peak reduction: repeatedly applies the automorphism with the largest
// strict decrease of cyclic length (least encoding on ties).
inline MinimizationResult whitehead_minimize(const Word& w) {
  check_whitehead_limits(w);
  const auto& autos = whitehead_automorphisms(w.rank());
  MinimizationResult res{cyclic_reduce(w), {}};
  for (;;) {
    std::size_t best_len = res.word.length();
    const WhiteheadEntry* best = nullptr;
    Word best_word;
    for (const auto& e : autos) {
      if (e.automorphism.kind() != WhiteheadAutomorphism::Kind::type_ii) continue;
      Word v = cyclic_reduce(e.map(res.word));
      if (v.length() < best_len) {
        best_len = v.length();
        best = &e;
        best_word = std::move(v);
      }
    }
    if (best == nullptr) break;
    res.word = std::move(best_word);
    res.trace.push_back(best->automorphism);
  }
  return res;
}

inline std::size_t minimal_cyclic_length(const Word& w) { return whitehead_minimize(w).word.length(); }

inline bool is_primitive(const Word& w) { return minimal_cyclic_length(w) == 1; }

struct OrbitDecision {
  bool same_orbit = false;
  // Whitehead automorphisms carrying w1 to a conjugate of w2, in application order.
  std::vector<WhiteheadAutomorphism> trace;
  // When same_orbit: an automorphism alpha with alpha(w1) == w2 exactly.
  std::optional<Endomorphism> automorphism;
};

namespace detail {

inline Endomorphism compose_trace(int rank, const std::vector<WhiteheadAutomorphism>& trace) {
  Endomorphism f = Endomorphism::identity(rank);
  for (const auto& a : trace) f = compose(a.endomorphism(), f);
  return f;
}

// u with u v u^-1 == target, given that v and target are conjugate.
inline Word conjugator(const Word& v, const Word& target) {
  Word p = cyclic_conjugator(v), q = cyclic_conjugator(target);
  Word c = cyclic_reduce(v), d = cyclic_reduce(target);
  for (std::size_t k = 0; k < std::max<std::size_t>(c.length(), 1); ++k) {
    if (rotate(c, k) == d) {
      Word s(v.rank(), std::span<const Letter>(c.letters().data(), k));
      return q * invert(s) * invert(p);
    }
  }
  throw InvariantViolation("conjugator requested for non-conjugate words");
}

}  // namespace detail

inline OrbitDecision same_orbit(const Word& w1, const Word& w2) {
  require_same_rank(w1, w2);
  check_whitehead_limits(w1);
  check_whitehead_limits(w2);
  const int rank = w1.rank();
  OrbitDecision out;
  MinimizationResult m1 = whitehead_minimize(w1), m2 = whitehead_minimize(w2);
  if (m1.word.length() != m2.word.length()) return out;

  Word start = cyclic_normal_form(m1.word), goal = cyclic_normal_form(m2.word);
  std::vector<WhiteheadAutomorphism> path;
  if (!(start == goal)) {
    const auto& autos = whitehead_automorphisms(rank);
    std::unordered_map<Word, std::pair<Word, std::size_t>, WordHash> parent;
    parent.emplace(start, std::make_pair(start, std::size_t(-1)));
    std::deque<Word> queue{start};
    bool found = false;
    while (!queue.empty() && !found) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < autos.size(); ++i) {
        Word v = cyclic_reduce(autos[i].map(cur));
        if (v.length() != cur.length()) continue;
        Word key = cyclic_normal_form(v);
        if (parent.count(key)) continue;
        parent.emplace(key, std::make_pair(cur, i));
        if (key == goal) {
          found = true;
          break;
        }
        if (parent.size() > kWhiteheadMaxStates) {
          throw BudgetError("Whitehead orbit search exceeded " + std::to_string(kWhiteheadMaxStates) + " states");
        }
        queue.push_back(std::move(key));
      }
    }
    if (!found) return out;
    for (Word cur = goal; !(cur == start);) {
      const auto& [prev, idx] = parent.at(cur);
      path.push_back(autos[idx].automorphism);
      cur = prev;
    }
    std::reverse(path.begin(), path.end());
  }

  out.same_orbit = true;
  out.trace = m1.trace;
  out.trace.insert(out.trace.end(), path.begin(), path.end());
  for (auto it = m2.trace.rbegin(); it != m2.trace.rend(); ++it) out.trace.push_back(it->inverse());

  Endomorphism alpha = detail::compose_trace(rank, out.trace);
  Word v = alpha(w1);
  Endomorphism exact = compose(Endomorphism::inner(detail::conjugator(v, w2)), alpha);
  if (!(exact(w1) == w2)) throw InvariantViolation("orbit witness does not map w1 to w2");
  out.automorphism = std::move(exact);
  return out;
}

}  // namespace wordlab
