#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "wordlab/catalog.hpp"
#include "wordlab/tuple_orbits.hpp"

using namespace wordlab;

namespace {

using Tuple = std::vector<Element>;

// Orbits under the three textbook moves on every coordinate pair: swap i and j,
// invert coordinate i, replace t_i by t_i t_j. A set-based BFS over raw tuples.
std::vector<std::set<Tuple>> reference_orbits(const FiniteGroup& g, int rank) {
  std::vector<Tuple> all{{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<Tuple> next;
    for (const auto& t : all)
      for (Element e = 0; e < g.order(); ++e) {
        Tuple u = t;
        u.push_back(e);
        next.push_back(u);
      }
    all = std::move(next);
  }
  auto neighbours = [&](const Tuple& t) {
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      Tuple inv = t;
      inv[i] = g.inv(t[i]);
      out.push_back(inv);
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (i == j) continue;
        Tuple sw = t, mul = t;
        std::swap(sw[i], sw[j]);
        mul[i] = g.mul(t[i], t[j]);
        out.push_back(sw);
        out.push_back(mul);
      }
    }
    return out;
  };
  std::set<Tuple> seen;
  std::vector<std::set<Tuple>> orbits;
  for (const auto& start : all) {
    if (seen.count(start)) continue;
    std::set<Tuple> orbit{start};
    std::vector<Tuple> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      Tuple t = queue.back();
      queue.pop_back();
      for (const auto& u : neighbours(t)) {
        if (seen.insert(u).second) {
          orbit.insert(u);
          queue.push_back(u);
        }
      }
    }
    orbits.push_back(orbit);
  }
  return orbits;
}

std::multiset<std::uint64_t> sizes(const OrbitReport& r) {
  std::multiset<std::uint64_t> out;
  for (const auto& o : r.orbits) out.insert(o.size);
  return out;
}

}  // namespace

TEST(NielsenAct, Examples) {
  auto s3 = make_group("S3");
  Tuple t{1, 2};
  EXPECT_EQ(nielsen_act(*s3, NielsenMove::swap(2), t), (Tuple{2, 1}));
  EXPECT_EQ(nielsen_act(*s3, NielsenMove::invert_first(2), t), (Tuple{s3->inv(1), 2}));
  EXPECT_EQ(nielsen_act(*s3, NielsenMove::multiply_first(2), t), (Tuple{s3->mul(1, 2), 2}));
  EXPECT_THROW(nielsen_act(*s3, NielsenMove::swap(3), t), RankError);
}

TEST(NielsenAct, MatchesSubstitutionIntoMoveImages) {
  // The action on Hom(F_r, G) evaluates the automorphism images at the tuple.
  std::mt19937_64 rng(181);
  auto g = make_group("S4");
  auto mul = [&](Element a, Element b) { return g->mul(a, b); };
  auto inv = [&](Element a) { return g->inv(a); };
  for (int t = 0; t < 100; ++t) {
    NielsenMove m = random_elementary_move(3, rng);
    Tuple tuple{static_cast<Element>(rng() % 24), static_cast<Element>(rng() % 24), static_cast<Element>(rng() % 24)};
    Endomorphism f = Endomorphism::from_move(m);
    Tuple expected;
    for (const auto& image : f.images()) expected.push_back(evaluate(image, tuple, mul, inv, Element{0}));
    EXPECT_EQ(nielsen_act(*g, m, tuple), expected) << m.name();
  }
}

TEST(OrbitDecomposition, Examples) {
  // Rank one: {e} and the rest up to inversion.
  auto c2 = orbit_decomposition(make_group("C2"), 1);
  EXPECT_EQ(c2.orbit_count(), 2u);
  EXPECT_EQ(c2.epi_tuple_count, 1u);
  auto c3 = orbit_decomposition(make_group("C3"), 1);
  EXPECT_EQ(c3.orbit_count(), 2u);
  EXPECT_EQ(sizes(c3), (std::multiset<std::uint64_t>{1, 2}));
  auto s3 = orbit_decomposition(make_group("S3"), 2);
  EXPECT_EQ(s3.total_tuples, 36u);
  EXPECT_EQ(s3.epi_tuple_count, 18u);
  EXPECT_EQ(s3.epi_orbit_count, 1u);
  EXPECT_TRUE(s3.transitive_on_epi());
}

TEST(OrbitDecomposition, MatchesReferenceBfs) {
  for (auto [spec, rank] : std::vector<std::pair<const char*, int>>{
           {"C2", 2}, {"C4", 2}, {"S3", 2}, {"Q8", 2}, {"D4", 2}, {"C2", 3}, {"S3", 3}, {"C2xC2", 3}}) {
    auto g = make_group(spec);
    std::vector<std::uint32_t> labels;
    auto rep = orbit_decomposition(g, rank, kDefaultTupleBudget, &labels);
    auto ref = reference_orbits(*g, rank);
    EXPECT_EQ(rep.orbit_count(), ref.size()) << spec << " r=" << rank;
    std::multiset<std::uint64_t> ref_sizes;
    std::uint64_t epi = 0;
    for (const auto& o : ref) {
      ref_sizes.insert(o.size());
      if (generates(*g, *o.begin())) epi += o.size();
    }
    EXPECT_EQ(sizes(rep), ref_sizes) << spec;
    EXPECT_EQ(rep.epi_tuple_count, epi) << spec;
    TupleCodec codec(g->order(), rank);
    for (const auto& o : ref) {
      std::set<std::uint32_t> ids;
      for (const auto& t : o) ids.insert(labels[codec.encode(t)]);
      EXPECT_EQ(ids.size(), 1u) << spec;
    }
  }
}

TEST(OrbitDecomposition, BudgetIsEnforced) {
  EXPECT_THROW(orbit_decomposition(make_group("S4"), 3, 1000), BudgetError);
}

TEST(Wiegold, Examples) {
  auto c2 = wiegold_report(make_group("C2"), 2);
  EXPECT_TRUE(c2.transitive_on_epi);
  EXPECT_EQ(c2.epi_tuple_count, 3u);
  auto trivial = wiegold_report(make_group("C1"), 2);
  EXPECT_TRUE(trivial.transitive_on_epi);
  EXPECT_EQ(trivial.epi_tuple_count, 1u);
  // Epi(F_1, C5) splits into {g, g^-1} pairs: not transitive.
  auto c5 = wiegold_report(make_group("C5"), 1);
  EXPECT_FALSE(c5.transitive_on_epi);
  EXPECT_EQ(c5.epi_orbit_count, 2u);
}

TEST(TupleOrbitProperties, MovesAreBijections) {
  for (const char* spec : {"C2", "S3", "Q8"}) {
    auto g = make_group(spec);
    for (int r = 1; r <= 3; ++r) {
      for (const auto& m : elementary_moves(r)) EXPECT_TRUE(nielsen_pushforward_is_uniform(*g, r, m)) << spec;
    }
  }
}

TEST(TupleOrbitProperties, OrbitsPartitionAndPreserveGeneration) {
  std::mt19937_64 rng(191);
  for (const char* spec : {"S3", "D4", "A4", "Q8"}) {
    auto g = make_group(spec);
    std::vector<std::uint32_t> labels;
    auto rep = orbit_decomposition(g, 2, kDefaultTupleBudget, &labels);
    std::uint64_t sum = 0;
    for (const auto& o : rep.orbits) sum += o.size;
    EXPECT_EQ(sum, rep.total_tuples);
    TupleCodec codec(g->order(), 2);
    Tuple t;
    for (int s = 0; s < 200; ++s) {
      std::uint64_t code = rng() % codec.total();
      codec.decode(code, t);
      Tuple u = nielsen_act(*g, random_elementary_move(2, rng), t);
      EXPECT_EQ(labels[code], labels[codec.encode(u)]);
      EXPECT_EQ(generates(*g, t), generates(*g, u));
      // Conjugating by an element of the generated subgroup is an inner automorphism.
      Element h = rng() % 2 ? t[0] : g->mul(t[1], g->inv(t[0]));
      Tuple c{g->conjugate(t[0], h), g->conjugate(t[1], h)};
      EXPECT_EQ(labels[code], labels[codec.encode(c)]);
    }
  }
}
