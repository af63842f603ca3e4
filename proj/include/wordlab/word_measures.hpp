#pragma once

// Exact word measures on finite groups.
//
// mu_w is the distribution of w(g_1, ..., g_r) for independent uniform g_i.
// It is a class function, stored as one exact weight per conjugacy class.
// Only the generators occurring in w are enumerated, and the first of them
// runs over class representatives only: conjugating the whole tuple by h
// conjugates the value, so each representative stands for its whole class.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/catalog.hpp"
#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"
#include "wordlab/parallel.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;  // word evaluations
  unsigned workers = 0;                              // 0: default_workers()
  bool class_representatives = true;                 // false: plain |G|^k scan
};

class ClassDistribution {
 public:
  ClassDistribution(GroupPtr group, std::vector<Rational> weights)
      : group_(std::move(group)), weights_(std::move(weights)) {
    if (weights_.size() != group_->class_count()) throw Error("one weight per conjugacy class required");
  }

  static ClassDistribution point_mass_identity(GroupPtr g) {
    std::vector<Rational> w(g->class_count(), Rational(0));
    w[0] = 1;
    return ClassDistribution(std::move(g), std::move(w));
  }

  // Haar measure: weight |c| / |G|.
  static ClassDistribution uniform(GroupPtr g) {
    std::vector<Rational> w;
    for (std::size_t c = 0; c < g->class_count(); ++c) w.emplace_back(Rational(g->class_size(c), g->order()));
    return ClassDistribution(std::move(g), std::move(w));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& weight(std::size_t c) const { return weights_.at(c); }

  Rational total() const {
    Rational s = 0;
    for (const auto& w : weights_) s += w;
    return s;
  }

 private:
  GroupPtr group_;
  std::vector<Rational> weights_;
};

inline bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || (a.name() == b.name() && a.order() == b.order() && a.table() == b.table());
}

inline void require_same_group(const ClassDistribution& a, const ClassDistribution& b) {
  if (!same_group(*a.group(), *b.group())) {
    throw GroupMismatch("distributions live on different groups: " + a.group()->name() + " vs " + b.group()->name());
  }
}

namespace detail {

// The word as a list of operand slots: slot 2s is g_s, slot 2s+1 is g_s^-1,
// s indexing the active generators.
struct CompiledWord {
  std::vector<int> active;
  std::vector<std::uint8_t> ops;
};

inline CompiledWord compile(const Word& w) {
  CompiledWord cw;
  cw.active = w.active_generators();
  if (cw.active.size() > 120) throw BudgetError("too many active generators");
  for (Letter l : w.letters()) {
    auto slot = std::lower_bound(cw.active.begin(), cw.active.end(), l.generator()) - cw.active.begin();
    cw.ops.push_back(static_cast<std::uint8_t>(2 * slot + (l.sign() < 0 ? 1 : 0)));
  }
  return cw;
}

}  // namespace detail

// Number of word evaluations word_class_counts will perform.
inline std::uint64_t enumeration_cost(const FiniteGroup& g, const Word& w, bool class_representatives = true) {
  std::size_t k = w.active_generators().size();
  if (k == 0) return 1;
  std::uint64_t cost = class_representatives ? g.class_count() : g.order();
  for (std::size_t i = 1; i < k; ++i) {
    if (cost > std::numeric_limits<std::uint64_t>::max() / g.order()) return std::numeric_limits<std::uint64_t>::max();
    cost *= g.order();
  }
  return cost;
}

// Number of tuples in G^k (k active generators) whose value lies in each class.
inline std::vector<std::uint64_t> word_class_counts(const FiniteGroup& g, const Word& w,
                                                    const EnumerationOptions& opt = {}) {
  const std::size_t n = g.order(), nc = g.class_count();
  std::vector<std::uint64_t> counts(nc, 0);
  auto cw = detail::compile(w);
  const std::size_t k = cw.active.size();
  if (k == 0) {
    counts[0] = 1;
    return counts;
  }
  std::uint64_t cost = enumeration_cost(g, w, opt.class_representatives);
  if (cost > opt.budget) {
    throw BudgetError("word measure on " + g.name() + " needs " + std::to_string(cost) +
                      " evaluations, above the budget of " + std::to_string(opt.budget) +
                      "; use Monte Carlo (mctau) or raise --budget");
  }
  const std::uint64_t inner = cost / (opt.class_representatives ? nc : n);  // n^(k-1)
  const Element* mult = g.table().data();
  const Element* inv = g.inverses().data();

  unsigned workers = opt.workers == 0 ? default_workers() : opt.workers;
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n, 0));

  parallel_chunks(cost, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    auto& acc = partial[worker];
    std::vector<Element> digits(k);
    std::vector<Element> operand(2 * k);
    // Decode begin into (outer, inner digits).
    std::uint64_t outer = begin / inner, rest = begin % inner;
    for (std::size_t s = k; s-- > 1;) {
      digits[s] = static_cast<Element>(rest % n);
      rest /= n;
    }
    auto first_value = [&](std::uint64_t o) {
      return opt.class_representatives ? g.class_representative(static_cast<std::size_t>(o)) : static_cast<Element>(o);
    };
    digits[0] = first_value(outer);
    std::uint64_t multiplicity = opt.class_representatives ? g.class_size(static_cast<std::size_t>(outer)) : 1;
    for (std::size_t s = 0; s < k; ++s) {
      operand[2 * s] = digits[s];
      operand[2 * s + 1] = inv[digits[s]];
    }
    // Per-worker counts are weighted by class size of the first digit; the
    // weight only changes when the outer index advances.
    std::vector<std::uint64_t> local(n, 0);
    auto flush = [&] {
      for (std::size_t e = 0; e < n; ++e) {
        if (local[e]) {
          acc[e] += local[e] * multiplicity;
          local[e] = 0;
        }
      }
    };
    const std::uint8_t* ops = cw.ops.data();
    const std::size_t len = cw.ops.size();
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Element x = operand[ops[0]];
      for (std::size_t i = 1; i < len; ++i) x = mult[static_cast<std::size_t>(x) * n + operand[ops[i]]];
      ++local[x];
      // Odometer step over the inner digits, carrying into the outer index.
      std::size_t s = k;
      while (s-- > 1) {
        if (++digits[s] < n) {
          operand[2 * s] = digits[s];
          operand[2 * s + 1] = inv[digits[s]];
          break;
        }
        digits[s] = 0;
        operand[2 * s] = 0;
        operand[2 * s + 1] = 0;
      }
      if (s == 0 || k == 1) {
        if (idx + 1 >= end) break;
        flush();
        ++outer;
        digits[0] = first_value(outer);
        operand[0] = digits[0];
        operand[1] = inv[digits[0]];
        multiplicity = opt.class_representatives ? g.class_size(static_cast<std::size_t>(outer)) : 1;
      }
    }
    flush();
  });

  for (const auto& p : partial)
    for (std::size_t e = 0; e < n; ++e) counts[g.class_of(static_cast<Element>(e))] += p[e];
  return counts;
}

inline ClassDistribution word_measure(const GroupPtr& g, const Word& w, const EnumerationOptions& opt = {}) {
  auto counts = word_class_counts(*g, w, opt);
  BigInt total = 1;
  for (std::size_t i = 0; i < w.active_generators().size(); ++i) total *= g->order();
  std::vector<Rational> weights;
  weights.reserve(counts.size());
  for (auto c : counts) weights.emplace_back(BigInt(c), total);
  return ClassDistribution(g, std::move(weights));
}

inline bool measures_equal(const ClassDistribution& a, const ClassDistribution& b) {
  require_same_group(a, b);
  return a.weights() == b.weights();
}

// Distribution of x*y for independent x ~ a, y ~ b.
inline ClassDistribution convolve(const ClassDistribution& a, const ClassDistribution& b) {
  require_same_group(a, b);
  const FiniteGroup& g = *a.group();
  const std::size_t nc = g.class_count();
  std::vector<Rational> out(nc, Rational(0));
  for (std::size_t c1 = 0; c1 < nc; ++c1) {
    if (a.weight(c1) == 0) continue;
    Element x = g.class_representative(c1);
    for (std::size_t c2 = 0; c2 < nc; ++c2) {
      if (b.weight(c2) == 0) continue;
      // By conjugation invariance x may be fixed to the representative.
      std::vector<std::uint64_t> hits(nc, 0);
      for (Element y : g.classes()[c2]) ++hits[g.class_of(g.mul(x, y))];
      Rational scale = a.weight(c1) * b.weight(c2) / Rational(g.class_size(c2));
      for (std::size_t k = 0; k < nc; ++k) {
        if (hits[k]) out[k] += scale * Rational(hits[k]);
      }
    }
  }
  return ClassDistribution(a.group(), std::move(out));
}

struct DistinguishResult {
  std::optional<std::string> witness;  // first catalog group with different measures
  std::vector<std::string> checked;
  std::vector<std::string> skipped;  // enumeration budget exceeded
};

inline DistinguishResult distinguish(const Word& w1, const Word& w2, std::size_t max_order,
                                     const EnumerationOptions& opt = {}, std::size_t order_cap = kDefaultOrderCap) {
  require_same_rank(w1, w2);
  DistinguishResult res;
  for (const auto& spec : catalog_specs(max_order)) {
    if (group_spec_order(spec) > order_cap) {
      res.skipped.push_back(spec);
      continue;
    }
    GroupPtr g = make_group(spec, order_cap);
    if (enumeration_cost(*g, w1) > opt.budget || enumeration_cost(*g, w2) > opt.budget) {
      res.skipped.push_back(spec);
      continue;
    }
    res.checked.push_back(spec);
    if (!measures_equal(word_measure(g, w1, opt), word_measure(g, w2, opt))) {
      res.witness = spec;
      break;
    }
  }
  return res;
}

}  // namespace wordlab
