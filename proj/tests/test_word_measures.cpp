#include <gtest/gtest.h>

#include <random>

#include "wordlab/automorphisms.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/word_measures.hpp"

using namespace wordlab;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }

// Full scan of G^r through the generic evaluator, one tuple at a time.
std::vector<Rational> scan_measure(const GroupPtr& g, const Word& v) {
  const auto n = static_cast<Element>(g->order());
  const int r = v.rank();
  std::vector<std::uint64_t> hits(g->class_count(), 0);
  std::vector<Element> t(static_cast<std::size_t>(r), 0);
  std::uint64_t total = 0;
  while (true) {
    auto mul = [&](Element a, Element b) { return g->mul(a, b); };
    auto inv = [&](Element a) { return g->inv(a); };
    ++hits[g->class_of(evaluate(v, t, mul, inv, Element{0}))];
    ++total;
    int i = r - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  std::vector<Rational> out;
  for (auto h : hits) out.emplace_back(BigInt(h), BigInt(total));
  return out;
}

}  // namespace

TEST(WordMeasure, SingleGeneratorIsHaar) {
  auto g = make_group("S4");
  EXPECT_TRUE(measures_equal(word_measure(g, w("x1", 2)), ClassDistribution::uniform(g)));
  EXPECT_TRUE(measures_equal(word_measure(g, w("x2 x1 x2^-1", 2)), ClassDistribution::uniform(g)));
}

TEST(WordMeasure, IdentityWordIsPointMass) {
  auto g = make_group("Q8");
  EXPECT_TRUE(measures_equal(word_measure(g, Word(2)), ClassDistribution::point_mass_identity(g)));
}

TEST(WordMeasure, CommutatorOnS3) {
  auto g = make_group("S3");
  auto mu = word_measure(g, w("[x1,x2]", 2));
  // Identity with probability 1/2, the 3-cycles with 1/2, never a transposition.
  EXPECT_EQ(mu.weights(), scan_measure(g, w("[x1,x2]", 2)));
  EXPECT_EQ(mu.weight(0), Rational(1, 2));
  for (std::size_t c = 1; c < g->class_count(); ++c) {
    EXPECT_EQ(mu.weight(c), g->class_size(c) == 2 ? Rational(1, 2) : Rational(0));
  }
}

TEST(WordMeasure, ClassRepresentativeKernelMatchesPlainScan) {
  std::mt19937_64 rng(101);
  for (const char* spec : {"S3", "Q8", "D4", "A4", "C2xS3"}) {
    auto g = make_group(spec);
    for (int t = 0; t < 6; ++t) {
      Word v = random_reduced_word(3, 1 + rng() % 8, rng);
      EnumerationOptions plain;
      plain.class_representatives = false;
      auto fast = word_measure(g, v);
      EXPECT_EQ(fast.weights(), word_measure(g, v, plain).weights()) << spec << " " << to_string(v);
      if (v.active_generators().size() <= 2 || g->order() <= 8) {
        EXPECT_EQ(fast.weights(), scan_measure(g, v)) << spec << " " << to_string(v);
      }
    }
  }
}

TEST(WordMeasure, WorkerCountDoesNotChangeResult) {
  auto g = make_group("S4");
  Word v = w("x1^2 x2^3 x3 x1^-1", 3);
  EnumerationOptions one, many;
  one.workers = 1;
  many.workers = 4;
  EXPECT_EQ(word_measure(g, v, one).weights(), word_measure(g, v, many).weights());
}

TEST(WordMeasure, BudgetIsEnforced) {
  auto g = make_group("S5");
  EnumerationOptions opt;
  opt.budget = 1000;
  EXPECT_THROW(word_measure(g, w("[x1,x2][x3,x4]", 4), opt), BudgetError);
  EXPECT_EQ(enumeration_cost(*g, w("[x1,x2]", 2)), 7u * 120u);
  EXPECT_EQ(enumeration_cost(*g, w("[x1,x2]", 2), false), 120u * 120u);
}

TEST(MeasuresEqual, Examples) {
  auto g = make_group("S3");
  EXPECT_TRUE(measures_equal(word_measure(g, w("x1", 2)), word_measure(g, w("x1 x2 x1^-1", 2))));
  EXPECT_FALSE(measures_equal(word_measure(g, w("x1", 2)), word_measure(g, w("x1^2", 2))));
  EXPECT_THROW(measures_equal(word_measure(g, w("x1", 1)), word_measure(make_group("C6"), w("x1", 1))), GroupMismatch);
}

TEST(Convolve, Examples) {
  auto g = make_group("S3");
  auto u = ClassDistribution::uniform(g), d = ClassDistribution::point_mass_identity(g);
  EXPECT_TRUE(measures_equal(convolve(d, u), u));
  EXPECT_TRUE(measures_equal(convolve(u, d), u));
  EXPECT_TRUE(measures_equal(convolve(d, d), d));
  // Two independent copies of x1 multiply to a Haar element.
  EXPECT_TRUE(measures_equal(convolve(u, u), u));
}

TEST(Convolve, DisjointProductsMultiply) {
  std::mt19937_64 rng(103);
  for (const char* spec : {"S3", "Q8", "D4"}) {
    auto g = make_group(spec);
    for (int t = 0; t < 8; ++t) {
      Word a = random_reduced_word(4, std::vector<int>{1, 2}, 1 + rng() % 6, rng);
      Word b = random_reduced_word(4, std::vector<int>{3, 4}, 1 + rng() % 6, rng);
      EXPECT_TRUE(measures_equal(word_measure(g, a * b), convolve(word_measure(g, a), word_measure(g, b))));
    }
  }
}

TEST(Distinguish, Examples) {
  auto r = distinguish(w("x1", 2), w("x1^2 x2^3", 2), 6);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, "S3");
  auto s = distinguish(w("x1^2", 1), w("x1^3", 1), 2);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(*s.witness, "C2");
  auto same = distinguish(w("[x1,x2]", 2), w("[x2,x1]", 2), 12);
  EXPECT_FALSE(same.witness.has_value());
  EXPECT_FALSE(same.checked.empty());
}

TEST(Distinguish, SkipsGroupsOverBudget) {
  EnumerationOptions opt;
  opt.budget = 50;
  auto r = distinguish(w("[x1,x2]", 2), w("[x2,x1]", 2), 12, opt);
  EXPECT_FALSE(r.skipped.empty());
}

TEST(WordMeasureProperties, TotalIsOneAndInvariantUnderMoves) {
  std::mt19937_64 rng(107);
  for (const char* spec : {"C4", "S3", "Q8", "D5", "A4"}) {
    auto g = make_group(spec);
    for (int t = 0; t < 10; ++t) {
      int r = 2 + static_cast<int>(rng() % 2);
      Word v = random_reduced_word(r, rng() % 9, rng);
      auto mu = word_measure(g, v);
      EXPECT_EQ(mu.total(), Rational(1));
      Word image = apply_nielsen(random_elementary_move(r, rng), v);
      EXPECT_TRUE(measures_equal(mu, word_measure(g, image))) << spec << " " << to_string(v);
    }
  }
}
