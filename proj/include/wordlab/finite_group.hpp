#pragma once

// Finite groups as dense multiplication tables over element indices 0..n-1.
// Element 0 is the identity; conjugacy classes are listed by least member.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wordlab/error.hpp"

namespace wordlab {

using Element = std::uint16_t;

inline constexpr std::size_t kMaxGroupOrder = std::numeric_limits<Element>::max();
inline constexpr std::size_t kDefaultOrderCap = 10080;

// Structural data of one direct factor from the catalog; used for characters
// and explicit representations. Elements are in lexicographic order of the
// factor's permutation model.
struct FactorModel {
  enum class Kind { cyclic, dihedral, symmetric, alternating, quaternion };
  Kind kind;
  int param = 0;  // n of C<n>, D<n>, S<n>, A<n>; 8 for Q8
  std::size_t order = 0;
  // Images of 0..degree-1 (symmetric and alternating factors).
  std::vector<std::vector<int>> permutations;
  // (j, reflection) with element r^j or r^j f, f: i -> -i (dihedral factors).
  std::vector<std::pair<int, bool>> dihedral;
  // Quaternion label: 2*unit + (negative ? 1 : 0), units 1, i, j, k.
  std::vector<int> quaternion;
  std::string name;
};

class FiniteGroup {
 public:
  // Validates the table and computes inverses and conjugacy classes. Element
  // 0 must be the identity.
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> mult,
              std::vector<std::shared_ptr<const FactorModel>> factors = {})
      : name_(std::move(name)), order_(order), mult_(std::move(mult)), factors_(std::move(factors)) {
    if (order_ == 0) throw Error("group order must be positive");
    if (order_ > kMaxGroupOrder) throw BudgetError("group order exceeds table capacity");
    if (mult_.size() != order_ * order_) throw Error("multiplication table has wrong size");
    validate_and_index();
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element conjugate(Element x, Element g) const noexcept { return mul(mul(g, x), inv(g)); }

  const std::vector<Element>& table() const noexcept { return mult_; }
  const std::vector<Element>& inverses() const noexcept { return inv_; }

  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Element>>& classes() const noexcept { return classes_; }
  std::size_t class_of(Element g) const noexcept { return class_of_[g]; }
  Element class_representative(std::size_t c) const { return classes_[c].front(); }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }

  const std::vector<std::shared_ptr<const FactorModel>>& factors() const noexcept { return factors_; }

  // Index of g inside factor f (elements of a direct product are mixed-radix,
  // first factor most significant).
  std::size_t component(Element g, std::size_t f) const {
    std::size_t stride = 1;
    for (std::size_t k = factors_.size(); k-- > f + 1;) stride *= factors_[k]->order;
    return (g / stride) % factors_[f]->order;
  }

  std::size_t element_order(Element g) const {
    std::size_t k = 1;
    for (Element x = g; x != 0; x = mul(x, g)) ++k;
    return k;
  }

  // Smallest e with g^e = 1 for all g.
  std::size_t exponent() const {
    std::size_t e = 1;
    for (std::size_t g = 0; g < order_; ++g) {
      std::size_t k = element_order(static_cast<Element>(g));
      e = e / std::gcd(e, k) * k;
    }
    return e;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = a + 1; b < order_; ++b) {
        if (mul(static_cast<Element>(a), static_cast<Element>(b)) != mul(static_cast<Element>(b), static_cast<Element>(a))) return false;
      }
    }
    return true;
  }

 private:
  void validate_and_index() {
    const std::size_t n = order_;
    for (Element x : mult_) {
      if (x >= n) throw InvariantViolation("multiplication table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (mul(0, static_cast<Element>(a)) != a || mul(static_cast<Element>(a), 0) != a) {
        throw InvariantViolation("element 0 is not the identity");
      }
    }
    // Latin square rows give unique inverses.
    inv_.assign(n, 0);
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      bool found = false;
      for (std::size_t b = 0; b < n; ++b) {
        Element p = mul(static_cast<Element>(a), static_cast<Element>(b));
        if (seen[p]) throw InvariantViolation("multiplication table row is not a permutation");
        seen[p] = 1;
        if (p == 0) {
          inv_[a] = static_cast<Element>(b);
          found = true;
        }
      }
      if (!found) throw InvariantViolation("element without inverse");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (mul(inv_[a], static_cast<Element>(a)) != 0) throw InvariantViolation("left and right inverses differ");
    }
    check_associativity();

    class_of_.assign(n, std::numeric_limits<std::size_t>::max());
    for (std::size_t x = 0; x < n; ++x) {
      if (class_of_[x] != std::numeric_limits<std::size_t>::max()) continue;
      std::size_t c = classes_.size();
      std::vector<Element> members;
      for (std::size_t g = 0; g < n; ++g) {
        Element y = conjugate(static_cast<Element>(x), static_cast<Element>(g));
        if (class_of_[y] != c) {
          class_of_[y] = c;
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      classes_.push_back(std::move(members));
    }
  }

  void check_associativity() const {
    const std::size_t n = order_;
    auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
      auto A = static_cast<Element>(a), B = static_cast<Element>(b), C = static_cast<Element>(c);
      return mul(mul(A, B), C) == mul(A, mul(B, C));
    };
    if (n <= 256) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (!assoc(a, b, c)) throw InvariantViolation("multiplication table is not associative");
      return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw InvariantViolation("multiplication table is not associative");
    }
  }

  std::string name_;
  std::size_t order_;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::shared_ptr<const FactorModel>> factors_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A point of G^r, i.e. a homomorphism F_r -> G.
struct GroupTuple {
  GroupPtr group;
  std::vector<Element> entries;
};

// Whether the entries generate all of G (closure from the identity).
inline bool generates(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue{0};
  in[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(queue[i], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == g.order();
}

inline bool generates(const GroupTuple& t) { return generates(*t.group, t.entries); }

}  // namespace wordlab
