#include <gtest/gtest.h>

#include <random>

#include "wordlab/abelian_toy.hpp"
#include "wordlab/automorphisms.hpp"

using namespace wordlab;

namespace {

// Distribution of sum x_i g_i over all (g_1, ..., g_r) in (Z/m)^r, by
// brute-force enumeration.
std::vector<Rational> enumerate_measure(const AbelianWord& x, std::int64_t m) {
  std::vector<std::uint64_t> hits(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> g(x.size(), 0);
  std::uint64_t total = 0;
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * g[i];
    ++hits[static_cast<std::size_t>(((s % m) + m) % m)];
    ++total;
    std::size_t i = x.size();
    while (i-- > 0) {
      if (++g[i] < m) break;
      g[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::vector<Rational> out;
  for (auto h : hits) out.emplace_back(BigInt(h), BigInt(total));
  return out;
}

// Apply a random product of elementary unimodular column operations.
AbelianWord random_unimodular_image(AbelianWord x, std::mt19937_64& rng) {
  const auto r = x.size();
  for (int step = 0; step < 12; ++step) {
    std::size_t i = rng() % r, j = rng() % r;
    switch (rng() % 3) {
      case 0: std::swap(x[i], x[j]); break;
      case 1: x[i] = -x[i]; break;
      default:
        if (i != j) x[i] += (static_cast<std::int64_t>(rng() % 5) - 2) * x[j];
        break;
    }
  }
  return x;
}

AbelianWord random_vector(std::size_t r, std::int64_t bound, std::mt19937_64& rng) {
  AbelianWord x(r);
  for (auto& v : x) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return x;
}

std::optional<std::int64_t> least_modulus_by_search(const AbelianWord& x, const AbelianWord& y, std::int64_t limit) {
  for (std::int64_t m = 1; m <= limit; ++m) {
    if (abelian_word_measure(x, m) != abelian_word_measure(y, m)) return m;
  }
  return std::nullopt;
}

}  // namespace

TEST(GlOrbitInvariant, Examples) {
  EXPECT_EQ(gl_orbit_invariant({2, 4}), 2);
  EXPECT_EQ(gl_orbit_invariant({2, 3}), 1);
  EXPECT_EQ(gl_orbit_invariant({0, 0}), 0);
  EXPECT_EQ(gl_orbit_invariant({-6, 9}), 3);
  EXPECT_EQ(gl_orbit_invariant({0, -5}), 5);
}

TEST(SameGlOrbit, Examples) {
  EXPECT_FALSE(same_gl_orbit({2, 4}, {2, 3}));
  EXPECT_TRUE(same_gl_orbit({4, 6}, {2, 0}));
  EXPECT_TRUE(same_gl_orbit({0, 0, 0}, {0, 0, 0}));
  EXPECT_THROW(same_gl_orbit({1, 2}, {1, 2, 3}), RankError);
}

TEST(SameGlOrbit, UnimodularImagesStayInOrbit) {
  std::mt19937_64 rng(193);
  for (int t = 0; t < 300; ++t) {
    AbelianWord x = random_vector(2 + rng() % 3, 12, rng);
    EXPECT_TRUE(same_gl_orbit(x, random_unimodular_image(x, rng)));
  }
}

TEST(AbelianWordMeasure, Examples) {
  auto mu = abelian_word_measure({2, 4}, 4);
  EXPECT_EQ(mu, (std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2), 0}));
  auto nu = abelian_word_measure({2, 3}, 4);
  EXPECT_EQ(nu, std::vector<Rational>(4, Rational(1, 4)));
  auto zero = abelian_word_measure({0, 0}, 3);
  EXPECT_EQ(zero, (std::vector<Rational>{1, 0, 0}));
  EXPECT_THROW(abelian_word_measure({1}, 0), Error);
}

TEST(AbelianWordMeasure, MatchesEnumeration) {
  std::mt19937_64 rng(197);
  for (std::int64_t m = 1; m <= 16; ++m) {
    for (int t = 0; t < 6; ++t) {
      AbelianWord x = random_vector(2, 20, rng);
      EXPECT_EQ(abelian_word_measure(x, m), enumerate_measure(x, m)) << "m=" << m;
    }
  }
}

TEST(DistinguishingModulus, Examples) {
  EXPECT_EQ(find_distinguishing_modulus({2, 4}, {2, 3}), std::optional<std::int64_t>(2));
  EXPECT_EQ(find_distinguishing_modulus({4, 6}, {2, 0}), std::nullopt);
  EXPECT_EQ(find_distinguishing_modulus({4, 0}, {2, 0}), std::optional<std::int64_t>(4));
  EXPECT_EQ(find_distinguishing_modulus({0, 0}, {6, 0}), std::optional<std::int64_t>(4));
  EXPECT_EQ(find_distinguishing_modulus({9, 0}, {3, 0}), std::optional<std::int64_t>(9));
  EXPECT_EQ(find_distinguishing_modulus({5, 10}, {7, 0}), std::optional<std::int64_t>(5));
}

TEST(DistinguishingModulus, IsLeastModulusWithDifferentMeasures) {
  std::mt19937_64 rng(199);
  for (int t = 0; t < 300; ++t) {
    AbelianWord x = random_vector(2, 30, rng), y = random_vector(2, 30, rng);
    auto found = find_distinguishing_modulus(x, y);
    // Entries of size <= 30 give gcds <= 30, so any separating modulus is below 64.
    auto searched = least_modulus_by_search(x, y, 128);
    EXPECT_EQ(found, searched);
  }
}

TEST(ParseAbelianWord, Examples) {
  EXPECT_EQ(parse_abelian_word("2,4"), (AbelianWord{2, 4}));
  EXPECT_EQ(parse_abelian_word("-3, 0 ,5"), (AbelianWord{-3, 0, 5}));
  EXPECT_THROW(parse_abelian_word("2,x"), ParseError);
  EXPECT_THROW(parse_abelian_word(""), ParseError);
}

TEST(AbelianToyProperties, CollapseOfOrbitsAndMeasures) {
  // Equal measures on every Z/m exactly when the gcds agree.
  std::mt19937_64 rng(211);
  for (int t = 0; t < 200; ++t) {
    AbelianWord x = random_vector(3, 10, rng);
    AbelianWord y = rng() % 2 ? random_unimodular_image(x, rng) : random_vector(3, 10, rng);
    bool equal_measures = true;
    for (std::int64_t m = 1; m <= 48 && equal_measures; ++m) {
      equal_measures = abelian_word_measure(x, m) == abelian_word_measure(y, m);
    }
    if (gl_orbit_invariant(x) <= 24 && gl_orbit_invariant(y) <= 24) {
      EXPECT_EQ(same_gl_orbit(x, y), equal_measures);
    }
  }
}

TEST(AbelianToyProperties, AbelianizationCommutesWithNielsenMoves) {
  std::mt19937_64 rng(223);
  for (int t = 0; t < 200; ++t) {
    int r = 2 + static_cast<int>(rng() % 2);
    Word v = random_reduced_word(r, rng() % 15, rng);
    Word image = apply_nielsen(random_elementary_move(r, rng), v);
    EXPECT_EQ(gl_orbit_invariant(abelianize(v)), gl_orbit_invariant(abelianize(image)));
  }
}
