#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wordlab/abelian_toy.hpp"
#include "wordlab/whitehead.hpp"

using namespace wordlab;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }

// Every Whitehead automorphism of F_2 written out by hand: the 8 signed
// permutations, and for each multiplier a in {x1, x1^-1, x2, x2^-1} the other
// generator y sent to y, y a, a^-1 y or a^-1 y a.
std::vector<Endomorphism> rank_two_whitehead_maps() {
  std::vector<Endomorphism> out;
  const char* perms[][2] = {{"x1", "x2"},       {"x1^-1", "x2"}, {"x1", "x2^-1"},      {"x1^-1", "x2^-1"},
                            {"x2", "x1"},       {"x2^-1", "x1"}, {"x2", "x1^-1"},      {"x2^-1", "x1^-1"}};
  for (auto& p : perms) out.emplace_back(std::vector<Word>{w(p[0], 2), w(p[1], 2)});
  for (const char* a : {"x1", "x1^-1", "x2", "x2^-1"}) {
    Word mult = w(a, 2);
    bool first = mult.letters()[0].generator() == 1;
    Word y = first ? w("x2", 2) : w("x1", 2);
    for (Word img : {y * mult, invert(mult) * y, invert(mult) * y * mult}) {
      out.emplace_back(first ? std::vector<Word>{w("x1", 2), img} : std::vector<Word>{img, w("x2", 2)});
    }
  }
  return out;
}

}  // namespace

TEST(WhiteheadAutomorphisms, CountsAtRankTwoAndThree) {
  // Type I: 2^r r! - 1 nontrivial; Type II: 2r multipliers times (4^(r-1) - 1).
  EXPECT_EQ(whitehead_automorphisms(2).size(), 7u + 4u * 3u);
  EXPECT_EQ(whitehead_automorphisms(3).size(), 47u + 6u * 15u);
}

TEST(WhiteheadAutomorphisms, AreAutomorphismsWithMatchingInverses) {
  std::mt19937_64 rng(3);
  for (const auto& e : whitehead_automorphisms(3)) {
    Endomorphism inv = e.automorphism.inverse().endomorphism();
    for (int t = 0; t < 5; ++t) {
      Word v = random_reduced_word(3, rng() % 10, rng);
      EXPECT_EQ(inv(e.map(v)), v) << e.automorphism.to_string();
    }
  }
}

TEST(WhiteheadAutomorphisms, RankTwoListMatchesHandWrittenList) {
  std::set<std::vector<Word>> library, hand;
  for (const auto& e : whitehead_automorphisms(2)) library.insert(e.map.images());
  for (const auto& f : rank_two_whitehead_maps()) {
    if (!(f == Endomorphism::identity(2))) hand.insert(f.images());
  }
  EXPECT_EQ(library, hand);
}

TEST(WhiteheadMinimize, Examples) {
  EXPECT_EQ(whitehead_minimize(w("x1", 2)).word, w("x1", 2));
  EXPECT_EQ(whitehead_minimize(w("x1^2 x2 x1^3", 2)).word.length(), 1u);
  EXPECT_EQ(whitehead_minimize(w("x1^2 x2^3", 2)).word.length(), 5u);
}

TEST(WhiteheadMinimize, NoHandWrittenAutomorphismShortensX1SquaredX2Cubed) {
  Word v = w("x1^2 x2^3", 2);
  for (const auto& f : rank_two_whitehead_maps()) EXPECT_GE(cyclic_reduce(f(v)).length(), 5u);
}

TEST(WhiteheadMinimize, TraceReproducesResult) {
  Word v = w("x1^2 x2 x1^3", 2);
  auto res = whitehead_minimize(v);
  Word cur = cyclic_reduce(v);
  for (const auto& a : res.trace) cur = cyclic_reduce(a.endomorphism()(cur));
  EXPECT_EQ(cur, res.word);
}

TEST(WhiteheadMinimize, RejectsOversizedInput) {
  std::mt19937_64 rng(1);
  Word long_word = random_reduced_word(2, kWhiteheadMaxLength + 1, rng);
  EXPECT_THROW(whitehead_minimize(long_word), BudgetError);
  EXPECT_THROW(whitehead_minimize(w("x6", 6)), BudgetError);
}

TEST(IsPrimitive, Examples) {
  EXPECT_TRUE(is_primitive(w("x1", 2)));
  EXPECT_TRUE(is_primitive(w("x1^2 x2 x1^3", 2)));
  EXPECT_FALSE(is_primitive(w("x1^2 x2^3", 2)));
  EXPECT_FALSE(is_primitive(w("[x1,x2]", 2)));
  EXPECT_FALSE(is_primitive(Word(2)));
  EXPECT_TRUE(is_primitive(w("x1 x2 x3", 3)));
}

TEST(SameOrbit, Examples) {
  EXPECT_TRUE(same_orbit(w("[x1,x2]", 2), w("[x2,x1]", 2)).same_orbit);
  Word v = w("x^2 y^2 x y^-1", 2);
  EXPECT_FALSE(same_orbit(v, invert(v)).same_orbit);
  EXPECT_FALSE(same_orbit(w("x1^2", 2), w("x1^3", 2)).same_orbit);
}

TEST(SameOrbit, WitnessMapsFirstWordToSecondExactly) {
  Word a = w("x1^2 x2 x1^3", 2), b = w("x2", 2);
  auto d = same_orbit(a, b);
  ASSERT_TRUE(d.same_orbit);
  ASSERT_TRUE(d.automorphism.has_value());
  EXPECT_EQ((*d.automorphism)(a), b);
  // Conjugates are in one orbit, and the witness includes the conjugation.
  Word c = w("x2 x1 x2^-1", 2);
  auto e = same_orbit(w("x1", 2), c);
  ASSERT_TRUE(e.same_orbit);
  EXPECT_EQ((*e.automorphism)(w("x1", 2)), c);
}

// Property tests over random automorphisms built from elementary moves.

TEST(WhiteheadProperties, OrbitIsReflexiveSymmetricAndMoveInvariant) {
  std::mt19937_64 rng(61);
  int tested = 0;
  while (tested < 60) {
    int r = 2 + static_cast<int>(rng() % 2);
    Word v = random_reduced_word(r, 1 + rng() % 7, rng);
    Word image = v;
    int moves = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < moves; ++i) image = apply_nielsen(random_elementary_move(r, rng), image);
    if (image.length() > 14) continue;
    ++tested;
    EXPECT_TRUE(same_orbit(v, v).same_orbit);
    auto d = same_orbit(v, image);
    ASSERT_TRUE(d.same_orbit) << to_string(v) << " vs " << to_string(image);
    EXPECT_EQ((*d.automorphism)(v), image);
    EXPECT_TRUE(same_orbit(image, v).same_orbit);
  }
}

TEST(WhiteheadProperties, MinimalLengthAndPrimitivityAreInvariant) {
  std::mt19937_64 rng(67);
  int tested = 0;
  while (tested < 80) {
    int r = 2 + static_cast<int>(rng() % 2);
    Word v = random_reduced_word(r, 1 + rng() % 8, rng);
    Word image = v;
    int moves = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < moves; ++i) image = apply_nielsen(random_elementary_move(r, rng), image);
    if (image.length() > 20) continue;
    ++tested;
    auto m = whitehead_minimize(v);
    EXPECT_LE(m.word.length(), cyclic_reduce(v).length());
    EXPECT_EQ(m.word.length(), minimal_cyclic_length(image));
    EXPECT_EQ(is_primitive(v), is_primitive(image));
  }
}

TEST(WhiteheadProperties, SameOrbitPreservesGcdOfAbelianization) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 60; ++t) {
    Word a = random_reduced_word(2, 1 + rng() % 6, rng), b = random_reduced_word(2, 1 + rng() % 6, rng);
    if (same_orbit(a, b).same_orbit) {
      EXPECT_EQ(gl_orbit_invariant(abelianize(a)), gl_orbit_invariant(abelianize(b)));
    }
  }
}
