#pragma once

// The Nielsen action of Aut(F_r) on G^r = Hom(F_r, G): x_i -> alpha(x_i)
// precomposed with a homomorphism gives the tuple (alpha(x_1)(g), ...).

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wordlab/automorphisms.hpp"
#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"

namespace wordlab {

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

inline std::vector<Element> nielsen_act(const FiniteGroup& g, const NielsenMove& m,
                                        std::span<const Element> t) {
  if (t.size() != static_cast<std::size_t>(m.rank())) throw RankError("tuple length differs from move rank");
  std::vector<Element> out(t.begin(), t.end());
  if (auto* p = std::get_if<Permute>(&m.move())) {
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[static_cast<std::size_t>(p->sigma[i])];
  } else if (std::holds_alternative<InvertFirst>(m.move())) {
    out[0] = g.inv(t[0]);
  } else {
    out[0] = g.mul(t[0], t[1]);
  }
  return out;
}

inline GroupTuple nielsen_act(const NielsenMove& m, const GroupTuple& t) {
  return GroupTuple{t.group, nielsen_act(*t.group, m, t.entries)};
}

// Mixed-radix encoding of G^r, first coordinate most significant.
class TupleCodec {
 public:
  TupleCodec(std::size_t order, int rank, std::uint64_t budget = kDefaultTupleBudget) : n_(order), r_(rank) {
    if (rank < 1) throw RankError("rank must be positive");
    total_ = 1;
    for (int i = 0; i < rank; ++i) {
      if (total_ > budget / n_) {
        throw BudgetError("|G|^r exceeds the tuple budget of " + std::to_string(budget));
      }
      total_ *= n_;
    }
  }

  std::uint64_t total() const noexcept { return total_; }

  std::uint64_t encode(std::span<const Element> t) const {
    std::uint64_t code = 0;
    for (Element e : t) code = code * n_ + e;
    return code;
  }

  void decode(std::uint64_t code, std::vector<Element>& out) const {
    out.resize(static_cast<std::size_t>(r_));
    for (int i = r_; i-- > 0;) {
      out[static_cast<std::size_t>(i)] = static_cast<Element>(code % n_);
      code /= n_;
    }
  }

 private:
  std::uint64_t n_;
  int r_;
  std::uint64_t total_;
};

// True iff the move permutes G^r (each tuple is hit exactly once).
inline bool nielsen_pushforward_is_uniform(const FiniteGroup& g, int rank, const NielsenMove& m,
                                           std::uint64_t budget = kDefaultTupleBudget) {
  if (m.rank() != rank) throw RankError("move rank differs from requested rank");
  TupleCodec codec(g.order(), rank, budget);
  std::vector<std::uint8_t> hit(codec.total(), 0);
  std::vector<Element> t;
  for (std::uint64_t c = 0; c < codec.total(); ++c) {
    codec.decode(c, t);
    auto img = codec.encode(nielsen_act(g, m, t));
    if (hit[img]) return false;
    hit[img] = 1;
  }
  return true;
}

struct OrbitInfo {
  std::uint64_t representative = 0;  // least code in the orbit
  std::uint64_t size = 0;
  bool generating = false;
};

struct OrbitReport {
  std::string group;
  int rank = 0;
  std::uint64_t total_tuples = 0;
  std::vector<OrbitInfo> orbits;  // ordered by representative
  std::uint64_t epi_orbit_count = 0;
  std::uint64_t epi_tuple_count = 0;

  std::size_t orbit_count() const noexcept { return orbits.size(); }
  bool transitive_on_epi() const noexcept { return epi_orbit_count == 1; }
};

namespace detail {

// Moves whose closure is the whole Nielsen action: swap(1,2), the cycle
// (1 2 ... r), inversion and multiplication of the first coordinate.
inline std::vector<NielsenMove> orbit_generators(int rank) {
  std::vector<NielsenMove> moves{NielsenMove::invert_first(rank)};
  if (rank >= 2) {
    moves.push_back(NielsenMove::swap(rank));
    moves.push_back(NielsenMove::multiply_first(rank));
    if (rank >= 3) {
      std::vector<int> cyc(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % rank;
      moves.push_back(NielsenMove::permute(std::move(cyc)));
    }
  }
  return moves;
}

}  // namespace detail

// Orbit label of every tuple code (label = index into report.orbits).
inline OrbitReport orbit_decomposition(const GroupPtr& group, int rank, std::uint64_t budget = kDefaultTupleBudget,
                                       std::vector<std::uint32_t>* labels = nullptr) {
  const FiniteGroup& g = *group;
  TupleCodec codec(g.order(), rank, budget);
  OrbitReport rep;
  rep.group = g.name();
  rep.rank = rank;
  rep.total_tuples = codec.total();
  auto moves = detail::orbit_generators(rank);

  constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint32_t> label(codec.total(), kUnseen);
  std::vector<std::uint64_t> queue;
  std::vector<Element> t;
  for (std::uint64_t start = 0; start < codec.total(); ++start) {
    if (label[start] != kUnseen) continue;
    auto id = static_cast<std::uint32_t>(rep.orbits.size());
    label[start] = id;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      codec.decode(queue[i], t);
      for (const auto& m : moves) {
        std::uint64_t c = codec.encode(nielsen_act(g, m, t));
        if (label[c] == kUnseen) {
          label[c] = id;
          queue.push_back(c);
        }
      }
    }
    codec.decode(start, t);
    OrbitInfo info{start, queue.size(), generates(g, t)};
    if (info.generating) {
      ++rep.epi_orbit_count;
      rep.epi_tuple_count += info.size;
    }
    rep.orbits.push_back(info);
  }
  if (labels) *labels = std::move(label);
  return rep;
}

struct WiegoldReport {
  bool transitive_on_epi = false;
  std::uint64_t epi_orbit_count = 0;
  std::uint64_t epi_tuple_count = 0;
};

inline WiegoldReport wiegold_report(const GroupPtr& group, int rank, std::uint64_t budget = kDefaultTupleBudget) {
  auto rep = orbit_decomposition(group, rank, budget);
  return {rep.transitive_on_epi(), rep.epi_orbit_count, rep.epi_tuple_count};
}

}  // namespace wordlab
