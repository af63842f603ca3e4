#pragma once

// Constructor catalog: C<n>, D<n> (order 2n), S<n>, A<n>, Q8 and direct
// products joined by 'x' ("S3xC2").

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"

namespace wordlab {

namespace detail {

struct BaseGroup {
  std::shared_ptr<const FactorModel> model;
  std::vector<Element> mult;
};

inline std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

// Rank of a permutation in lexicographic order of all permutations of its degree.
inline std::size_t lehmer_rank(const std::vector<int>& p) {
  std::size_t n = p.size(), rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline bool is_even(const std::vector<int>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

inline BaseGroup cyclic(int n) {
  auto m = std::make_shared<FactorModel>();
  m->kind = FactorModel::Kind::cyclic;
  m->param = n;
  m->order = static_cast<std::size_t>(n);
  m->name = "C" + std::to_string(n);
  BaseGroup g{m, std::vector<Element>(m->order * m->order)};
  // Rotation by j maps 0 to j, so index order is lexicographic.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult[static_cast<std::size_t>(a * n + b)] = static_cast<Element>((a + b) % n);
  return g;
}

inline BaseGroup dihedral(int n) {
  if (n < 3) throw ParseError("D<n> requires n >= 3 (use C2 or C2xC2)");
  auto m = std::make_shared<FactorModel>();
  m->kind = FactorModel::Kind::dihedral;
  m->param = n;
  m->order = 2 * static_cast<std::size_t>(n);
  m->name = "D" + std::to_string(n);
  // Permutation of the n-gon: rotation i -> j+i, reflection i -> j-i. The
  // images of 0 and 1 determine the element and its lexicographic position.
  std::vector<std::pair<int, bool>> els;
  for (int j = 0; j < n; ++j) {
    els.emplace_back(j, false);
    els.emplace_back(j, true);
  }
  auto image1 = [n](const std::pair<int, bool>& e) { return e.second ? (e.first - 1 + n) % n : (e.first + 1) % n; };
  std::sort(els.begin(), els.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return image1(a) < image1(b);
  });
  m->dihedral = els;
  std::vector<std::size_t> index(2 * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < els.size(); ++i) {
    index[static_cast<std::size_t>(els[i].first) * 2 + els[i].second] = i;
  }
  BaseGroup g{m, std::vector<Element>(m->order * m->order)};
  for (std::size_t a = 0; a < els.size(); ++a) {
    for (std::size_t b = 0; b < els.size(); ++b) {
      auto [ja, fa] = els[a];
      auto [jb, fb] = els[b];
      // r^a f^s * r^b f^t = r^(a +- b) f^(s xor t)
      int j = fa ? (ja - jb) : (ja + jb);
      j = ((j % n) + n) % n;
      g.mult[a * els.size() + b] = static_cast<Element>(index[static_cast<std::size_t>(j) * 2 + (fa != fb)]);
    }
  }
  return g;
}

inline BaseGroup symmetric_like(int n, bool alternating) {
  auto m = std::make_shared<FactorModel>();
  m->kind = alternating ? FactorModel::Kind::alternating : FactorModel::Kind::symmetric;
  m->param = n;
  m->name = (alternating ? "A" : "S") + std::to_string(n);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::size_t total = 1;
  for (int i = 2; i <= n; ++i) total *= static_cast<std::size_t>(i);
  std::vector<std::size_t> index_of_rank(total, 0);
  do {
    if (alternating && !is_even(p)) continue;
    index_of_rank[lehmer_rank(p)] = m->permutations.size();
    m->permutations.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  m->order = m->permutations.size();
  BaseGroup g{m, std::vector<Element>(m->order * m->order)};
  for (std::size_t a = 0; a < m->order; ++a)
    for (std::size_t b = 0; b < m->order; ++b)
      g.mult[a * m->order + b] = static_cast<Element>(
          index_of_rank[lehmer_rank(compose_perm(m->permutations[a], m->permutations[b]))]);
  return g;
}

// Quaternion units: label 2*u + s for (-1)^s * {1,i,j,k}[u].
inline int quaternion_product(int a, int b) {
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  int ua = a / 2, ub = b / 2;
  int s = (a % 2) ^ (b % 2) ^ kSign[ua][ub];
  return 2 * kUnit[ua][ub] + s;
}

inline BaseGroup quaternion() {
  auto m = std::make_shared<FactorModel>();
  m->kind = FactorModel::Kind::quaternion;
  m->param = 8;
  m->order = 8;
  m->name = "Q8";
  // Left-regular permutations on the labels; sort them lexicographically.
  std::vector<std::vector<int>> perms;
  for (int q = 0; q < 8; ++q) {
    std::vector<int> p(8);
    for (int x = 0; x < 8; ++x) p[static_cast<std::size_t>(x)] = quaternion_product(q, x);
    perms.push_back(p);
  }
  std::vector<int> labels(8);
  std::iota(labels.begin(), labels.end(), 0);
  std::sort(labels.begin(), labels.end(), [&](int a, int b) { return perms[static_cast<std::size_t>(a)] < perms[static_cast<std::size_t>(b)]; });
  m->quaternion = labels;
  std::vector<std::size_t> index(8);
  for (std::size_t i = 0; i < 8; ++i) index[static_cast<std::size_t>(labels[i])] = i;
  BaseGroup g{m, std::vector<Element>(64)};
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      g.mult[a * 8 + b] = static_cast<Element>(index[static_cast<std::size_t>(quaternion_product(labels[a], labels[b]))]);
  return g;
}

inline std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

struct FactorSpec {
  char letter;
  int n;
};

inline std::vector<FactorSpec> parse_group_spec(std::string_view spec) {
  std::vector<FactorSpec> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError("group spec '" + std::string(spec) + "': " + msg, pos); };
  while (true) {
    if (pos >= spec.size()) fail("expected a factor");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[pos])));
    if (c != 'C' && c != 'D' && c != 'S' && c != 'A' && c != 'Q') fail("unknown factor '" + std::string(1, spec[pos]) + "'");
    ++pos;
    std::size_t start = pos;
    long long n = 0;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
      n = n * 10 + (spec[pos] - '0');
      if (n > 1'000'000) fail("parameter too large");
      ++pos;
    }
    if (pos == start) fail("missing parameter");
    if (n < 1) fail("parameter must be positive");
    if (c == 'Q' && n != 8) fail("only Q8 is supported");
    if ((c == 'S' || c == 'A') && n > 8) fail("S<n> and A<n> require n <= 8");
    if (c == 'A' && n < 2) fail("A<n> requires n >= 2");
    if (c == 'D' && n < 3) fail("D<n> requires n >= 3 (use C2 or C2xC2)");
    out.push_back({c, static_cast<int>(n)});
    if (pos == spec.size()) break;
    if (spec[pos] != 'x' && spec[pos] != 'X') fail("expected 'x' between factors");
    ++pos;
  }
  return out;
}

inline std::size_t factor_order(const FactorSpec& f) {
  switch (f.letter) {
    case 'C': return static_cast<std::size_t>(f.n);
    case 'D': return 2 * static_cast<std::size_t>(f.n);
    case 'S': return factorial(f.n);
    case 'A': return f.n < 2 ? 1 : factorial(f.n) / 2;
    default: return 8;
  }
}

inline BaseGroup build_factor(const FactorSpec& f) {
  switch (f.letter) {
    case 'C': return cyclic(f.n);
    case 'D': return dihedral(f.n);
    case 'S': return symmetric_like(f.n, false);
    case 'A': return symmetric_like(f.n, true);
    default: return quaternion();
  }
}

}  // namespace detail

// Order of the group a spec describes, without building it.
inline std::size_t group_spec_order(std::string_view spec) {
  std::size_t order = 1;
  for (const auto& f : detail::parse_group_spec(spec)) {
    order *= detail::factor_order(f);
    if (order > kMaxGroupOrder) return kMaxGroupOrder + 1;
  }
  return order;
}

inline GroupPtr make_group(std::string_view spec, std::size_t order_cap = kDefaultOrderCap) {
  auto factors = detail::parse_group_spec(spec);
  std::size_t order = group_spec_order(spec);
  if (order > order_cap || order > kMaxGroupOrder) {
    throw BudgetError("group " + std::string(spec) + " has order above the cap " + std::to_string(order_cap));
  }
  std::vector<detail::BaseGroup> bases;
  for (const auto& f : factors) bases.push_back(detail::build_factor(f));

  std::vector<Element> mult{0};
  std::size_t n = 1;
  std::string name;
  std::vector<std::shared_ptr<const FactorModel>> models;
  for (const auto& b : bases) {
    std::size_t m = b.model->order, nm = n * m;
    std::vector<Element> next(nm * nm);
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b1 = 0; b1 < n; ++b1)
          for (std::size_t b2 = 0; b2 < m; ++b2)
            next[(a1 * m + a2) * nm + (b1 * m + b2)] =
                static_cast<Element>(mult[a1 * n + b1] * m + b.mult[a2 * m + b2]);
    mult = std::move(next);
    n = nm;
    name += (name.empty() ? "" : "x") + b.model->name;
    models.push_back(b.model);
  }
  return std::make_shared<const FiniteGroup>(name, n, std::move(mult), std::move(models));
}

// Groups used by the distinguisher, ordered by (order, name). Isomorphic
// duplicates with a more familiar name are left out: D3 (= S3), A3 (= C3),
// S1, S2, A2, and Cm x Cn with gcd(m, n) = 1 (= Cmn).
inline std::vector<std::string> catalog_specs(std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::string>> base;
  for (std::size_t n = 1; n <= max_order; ++n) base.emplace_back(n, "C" + std::to_string(n));
  for (std::size_t n = 4; 2 * n <= max_order; ++n) base.emplace_back(2 * n, "D" + std::to_string(n));
  for (int n = 3; n <= 8 && detail::factorial(n) <= max_order; ++n) base.emplace_back(detail::factorial(n), "S" + std::to_string(n));
  for (int n = 4; n <= 8 && detail::factorial(n) / 2 <= max_order; ++n) base.emplace_back(detail::factorial(n) / 2, "A" + std::to_string(n));
  if (max_order >= 8) base.emplace_back(8, "Q8");

  std::vector<std::pair<std::size_t, std::string>> all = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      auto [oi, ni] = base[i];
      auto [oj, nj] = base[j];
      if (oi < 2 || oj < 2 || oi * oj > max_order) continue;
      if (ni[0] == 'C' && nj[0] == 'C' && std::gcd(oi, oj) == 1) continue;
      std::string a = ni, b = nj;
      if (b < a) std::swap(a, b);
      all.emplace_back(oi * oj, a + "x" + b);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::string> out;
  for (auto& [o, n] : all) out.push_back(n);
  return out;
}

}  // namespace wordlab
