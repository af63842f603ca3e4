#include <gtest/gtest.h>

#include "wordlab/automorphisms.hpp"
#include "wordlab/haar_mc.hpp"

using namespace wordlab;

namespace {

Word w(const char* text, int rank) { return parse_word(text, rank); }

}  // namespace

TEST(SampleStream, DependsOnSeedAndIndex) {
  SampleStream a(1, 0), b(1, 0), c(1, 1), d(2, 0);
  auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
}

TEST(HaarSampling, UnitaryAndOrthogonal) {
  SampleStream rng(7, 0);
  for (int n : {1, 2, 3, 5, 8}) {
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXcd u = sample_haar_unitary(n, rng);
      EXPECT_LT((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
      Eigen::MatrixXd o = sample_haar_orthogonal(n, rng);
      EXPECT_LT((o * o.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(HaarSampling, TraceMomentsOfUnitary) {
  // E tr U = 0 and E |tr U|^2 = 1, accumulated here sample by sample.
  const int samples = 20000;
  for (int n : {2, 4}) {
    ComplexAccumulator first, second;
    for (int i = 0; i < samples; ++i) {
      SampleStream rng(11, static_cast<std::uint64_t>(i));
      auto tr = sample_haar_unitary(n, rng).trace();
      first.add(tr);
      second.add(std::norm(tr));
    }
    EXPECT_LT(std::abs(first.mean), 4 * first.standard_error()) << n;
    EXPECT_LT(std::abs(second.mean - 1.0), 4 * second.standard_error()) << n;
  }
}

TEST(HaarSampling, OrthogonalDeterminantsAreBalanced) {
  const int samples = 4000;
  int positive = 0;
  for (int i = 0; i < samples; ++i) {
    SampleStream rng(13, static_cast<std::uint64_t>(i));
    double det = sample_haar_orthogonal(3, rng).determinant();
    EXPECT_NEAR(std::abs(det), 1.0, 1e-10);
    positive += det > 0;
  }
  // Binomial(4000, 1/2) has standard deviation about 31.6.
  EXPECT_NEAR(positive, samples / 2, 130);
}

TEST(ComplexAccumulator, MergeMatchesSequential) {
  ComplexAccumulator all, left, right;
  for (int i = 0; i < 100; ++i) {
    std::complex<double> x(std::sin(i * 0.7), std::cos(i * 1.3) * i);
    all.add(x);
    (i < 37 ? left : right).add(x);
  }
  left.merge(right);
  EXPECT_EQ(left.count, all.count);
  EXPECT_LT(std::abs(left.mean - all.mean), 1e-12);
  EXPECT_NEAR(left.standard_error(), all.standard_error(), 1e-12);
}

TEST(McTau, Examples) {
  // tau of the commutator is 1/n on U(n); x1^2 has tau 0 on U(n) and 1 on O(n).
  auto comm = mc_tau(MatrixFamily::unitary, 2, w("[x1,x2]", 2), 20000, 5);
  EXPECT_TRUE(comm.consistent_with(0.5)) << comm.mean << " +- " << comm.standard_error;
  auto sq_u = mc_tau(MatrixFamily::unitary, 3, w("x1^2", 1), 20000, 5);
  EXPECT_TRUE(sq_u.consistent_with(0.0)) << sq_u.mean;
  auto sq_o = mc_tau(MatrixFamily::orthogonal, 3, w("x1^2", 1), 20000, 5);
  EXPECT_TRUE(sq_o.consistent_with(1.0)) << sq_o.mean;
  auto id = mc_tau(MatrixFamily::orthogonal, 4, Word(1), 100, 5);
  EXPECT_EQ(id.mean, std::complex<double>(4.0, 0.0));
  EXPECT_EQ(comm.target(), "tau_U(2),std(x1 x2 x1^-1 x2^-1)");
}

TEST(McTau, IdenticalAcrossWorkerCounts) {
  Word v = w("x1^2 x2^-1 x1 x2", 2);
  auto one = mc_tau(MatrixFamily::unitary, 3, v, 10000, 99, 1);
  auto four = mc_tau(MatrixFamily::unitary, 3, v, 10000, 99, 4);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.standard_error, four.standard_error);
  auto other_seed = mc_tau(MatrixFamily::unitary, 3, v, 10000, 100, 1);
  EXPECT_NE(one.mean, other_seed.mean);
}

TEST(McTau, RejectsBadArguments) {
  EXPECT_THROW(mc_tau(MatrixFamily::unitary, 2, w("x1", 1), 99, 1), Error);
  EXPECT_THROW(mc_tau(MatrixFamily::unitary, 1, w("x1", 1), 1000, 1), Error);
  EXPECT_THROW(parse_matrix_family("SU"), ParseError);
  EXPECT_EQ(parse_matrix_family("O"), MatrixFamily::orthogonal);
}

TEST(McTauProperties, AutomorphicWordsAgreeWithinNoise) {
  std::mt19937_64 rng(227);
  for (int t = 0; t < 4; ++t) {
    Word v = random_reduced_word(2, 2 + rng() % 4, rng);
    Word image = apply_nielsen(random_elementary_move(2, rng), v);
    auto a = mc_tau(MatrixFamily::unitary, 2, v, 8000, 17);
    auto b = mc_tau(MatrixFamily::unitary, 2, image, 8000, 18);
    double combined = std::hypot(a.standard_error, b.standard_error);
    EXPECT_LT(std::abs(a.mean - b.mean), 5 * combined + 1e-12) << to_string(v) << " vs " << to_string(image);
  }
}

TEST(McTauProperties, SurfaceWordOnOrthogonalGroup) {
  // t_1 = x1^2 gives 1 on O(n); t_2 = x1^2 x2^2 gives 1/n.
  auto t2 = mc_tau(MatrixFamily::orthogonal, 3, w("x1^2 x2^2", 2), 20000, 23);
  EXPECT_TRUE(t2.consistent_with(1.0 / 3.0)) << t2.mean << " +- " << t2.standard_error;
}
