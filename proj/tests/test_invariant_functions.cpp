#include <gtest/gtest.h>

#include <random>

#include "wordlab/automorphisms.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/invariant_functions.hpp"

using namespace wordlab;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }

std::vector<Word> distinct_words(int rank, std::size_t count, std::size_t max_length, std::mt19937_64& rng) {
  std::vector<Word> out;
  while (out.size() < count) {
    Word v = random_reduced_word(rank, rng() % (max_length + 1), rng);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

// Positive semidefinite iff a Cholesky factorisation of M + eps I exists.
bool cholesky_psd(const Eigen::MatrixXcd& m, double eps = 1e-8) {
  Eigen::MatrixXcd shifted = m + eps * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::LLT<Eigen::MatrixXcd> llt(shifted);
  return llt.info() == Eigen::Success;
}

// Whether w evaluates to e for every tuple, by direct substitution.
bool vanishes_by_scan(const FiniteGroup& g, const Word& v) {
  const auto n = static_cast<Element>(g.order());
  std::vector<Element> t(static_cast<std::size_t>(v.rank()), 0);
  auto mul = [&](Element a, Element b) { return g.mul(a, b); };
  auto inv = [&](Element a) { return g.inv(a); };
  while (true) {
    if (evaluate(v, t, mul, inv, Element{0}) != 0) return false;
    int i = v.rank() - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return true;
  }
}

}  // namespace

TEST(VanishesOn, Examples) {
  EXPECT_TRUE(vanishes_on(*make_group("C2"), w("x1^2", 1)));
  EXPECT_TRUE(vanishes_on(*make_group("C2xC2"), w("x1^2", 1)));
  EXPECT_FALSE(vanishes_on(*make_group("C3"), w("x1^2", 1)));
  EXPECT_TRUE(vanishes_on(*make_group("C2xC4"), w("[x1,x2]", 2)));
  EXPECT_FALSE(vanishes_on(*make_group("S3"), w("[x1,x2]", 2)));
  EXPECT_TRUE(vanishes_on(*make_group("S3"), w("x1^6", 1)));
  EXPECT_TRUE(vanishes_on(*make_group("S3"), Word(2)));
}

TEST(VanishesOn, MatchesDirectSubstitution) {
  std::mt19937_64 rng(151);
  for (const char* spec : {"C2", "C3", "C2xC2", "S3", "Q8"}) {
    auto g = make_group(spec);
    for (int t = 0; t < 20; ++t) {
      Word v = random_reduced_word(2, rng() % 9, rng);
      EXPECT_EQ(vanishes_on(*g, v), vanishes_by_scan(*g, v)) << spec << " " << to_string(v);
    }
  }
}

TEST(InvariantFunction, Names) {
  EXPECT_EQ(InvariantFunction::delta_identity().name(), "Delta_e");
  EXPECT_EQ(InvariantFunction::trivial().name(), "Trivial");
  EXPECT_EQ(InvariantFunction::characteristic_kernel(make_group("S3")).name(), "CharKernel(S3)");
  auto irreps = builtin_irreps(make_group("S3"));
  EXPECT_EQ(InvariantFunction::tau_representation(irreps.back(), true).name(), "TauRep(S3,[2,1],normalized)");
}

TEST(InvariantFunction, Values) {
  auto delta = InvariantFunction::delta_identity();
  EXPECT_EQ(delta(Word(2)), Cyclotomic(1));
  EXPECT_EQ(delta(w("x1 x2", 2)), Cyclotomic(0));
  EXPECT_EQ(InvariantFunction::trivial()(w("x1 x2", 2)), Cyclotomic(1));
  auto tau_std = InvariantFunction::tau_representation(std_rep(3));
  EXPECT_EQ(tau_std(w("x1^2 x2^3", 2)), Cyclotomic(Rational(3, 2)));
  auto normalized = InvariantFunction::tau_representation(std_rep(3), true);
  EXPECT_EQ(normalized(w("x1^2 x2^3", 2)), Cyclotomic(Rational(1, 2)));
  EXPECT_EQ(normalized(Word(2)), Cyclotomic(1));
}

TEST(PsdCheck, DeltaGivesIdentityGram) {
  std::mt19937_64 rng(157);
  auto words = distinct_words(2, 8, 6, rng);
  auto rep = psd_report(InvariantFunction::delta_identity(), words);
  EXPECT_TRUE(rep.positive_semidefinite);
  EXPECT_LT((rep.gram - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-12);
  EXPECT_NEAR(rep.least_eigenvalue, 1.0, 1e-12);
}

TEST(PsdCheck, TrivialGivesAllOnesGram) {
  std::mt19937_64 rng(163);
  auto words = distinct_words(2, 6, 6, rng);
  auto rep = psd_report(InvariantFunction::trivial(), words);
  EXPECT_TRUE(rep.positive_semidefinite);
  EXPECT_LT((rep.gram - Eigen::MatrixXcd::Ones(6, 6)).norm(), 1e-12);
  EXPECT_NEAR(rep.least_eigenvalue, 0.0, 1e-9);
}

TEST(PsdCheck, RejectsRepeatedWords) {
  std::vector<Word> words{w("x1", 2), w("x1", 2)};
  EXPECT_THROW(psd_check(InvariantFunction::trivial(), words), Error);
}

TEST(PsdCheck, DetectsNegativeDefiniteFunction) {
  // A fake one-dimensional "character" equal to -1 everywhere gives Gram = -J.
  Representation fake;
  fake.group = make_group("S3");
  fake.dim = 1;
  fake.label = "minus";
  fake.character.assign(fake.group->class_count(), Cyclotomic(-1));
  std::vector<Word> words{w("x1", 2), w("x2", 2), w("x1 x2", 2)};
  auto rep = psd_report(InvariantFunction::tau_representation(fake), words);
  EXPECT_FALSE(rep.positive_semidefinite);
  EXPECT_NEAR(rep.least_eigenvalue, -3.0, 1e-9);
  EXPECT_FALSE(cholesky_psd(rep.gram));
}

TEST(PsdCheck, AgreesWithCholeskyOracle) {
  std::mt19937_64 rng(167);
  std::vector<InvariantFunction> functions{
      InvariantFunction::characteristic_kernel(make_group("S3")),
      InvariantFunction::characteristic_kernel(make_group("C2xC2")),
      InvariantFunction::tau_representation(builtin_irreps(make_group("S3")).back()),
      InvariantFunction::tau_representation(builtin_irreps(make_group("Q8")).back(), true),
      InvariantFunction::tau_representation(std_rep(3))};
  for (const auto& f : functions) {
    for (int trial = 0; trial < 2; ++trial) {
      auto words = distinct_words(2, 10, 5, rng);
      auto rep = psd_report(f, words);
      EXPECT_TRUE(rep.positive_semidefinite) << f.name() << " least eigenvalue " << rep.least_eigenvalue;
      EXPECT_TRUE(cholesky_psd(rep.gram)) << f.name();
      // Rebuild the Gram matrix entry by entry.
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
          EXPECT_LT(std::abs(rep.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                             f(words[i] * invert(words[j])).to_complex()),
                    1e-12);
    }
  }
}

TEST(InvariantFunctionProperties, ValuesAreInvariantUnderAutomorphisms) {
  std::mt19937_64 rng(173);
  std::vector<InvariantFunction> functions{
      InvariantFunction::characteristic_kernel(make_group("S3")),
      InvariantFunction::characteristic_kernel(make_group("Q8")),
      InvariantFunction::tau_representation(builtin_irreps(make_group("S3")).back()),
      InvariantFunction::tau_representation(builtin_irreps(make_group("A4")).back(), true)};
  for (const auto& f : functions) {
    for (int t = 0; t < 15; ++t) {
      Word v = random_reduced_word(2, rng() % 8, rng);
      Word image = apply_nielsen(random_elementary_move(2, rng), v);
      EXPECT_EQ(f(v), f(image)) << f.name() << " " << to_string(v);
    }
  }
}
