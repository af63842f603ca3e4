#pragma once

// Monte Carlo estimates of E[tr w(g_1, ..., g_r)] for Haar-random unitary or
// orthogonal matrices.
//
// Sample i draws from its own stream keyed by (seed, i), and samples are
// accumulated in fixed blocks merged in block order, so the estimate is
// bit-identical for any number of workers.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/parallel.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

enum class MatrixFamily { unitary, orthogonal };

inline std::string to_string(MatrixFamily f) { return f == MatrixFamily::unitary ? "U" : "O"; }

inline MatrixFamily parse_matrix_family(const std::string& s) {
  if (s == "U" || s == "u") return MatrixFamily::unitary;
  if (s == "O" || s == "o") return MatrixFamily::orthogonal;
  throw ParseError("unknown matrix family '" + s + "' (expected U or O)");
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// SplitMix64 stream starting from a state derived from (seed, index).
class SampleStream {
 public:
  using result_type = std::uint64_t;

  SampleStream(std::uint64_t seed, std::uint64_t index) : state_(splitmix64(splitmix64(seed) ^ index)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Ginibre matrix, QR, then each column of Q multiplied by the phase of the
// matching diagonal entry of R. Without the phase fix the law is not Haar.
template <typename Rng>
Eigen::MatrixXcd sample_haar_unitary(int n, Rng& rng) {
  if (n < 1) throw Error("dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double re = normal(rng);
      double im = normal(rng);
      z(i, j) = std::complex<double>(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

template <typename Rng>
Eigen::MatrixXd sample_haar_orthogonal(int n, Rng& rng) {
  if (n < 1) throw Error("dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

// Mergeable running mean and sum of squared deviations of complex samples
// (real and imaginary parts tracked separately).
struct ComplexAccumulator {
  std::uint64_t count = 0;
  std::complex<double> mean = 0;
  double m2_re = 0, m2_im = 0;

  void add(std::complex<double> x) {
    ++count;
    std::complex<double> delta = x - mean;
    mean += delta / static_cast<double>(count);
    std::complex<double> delta2 = x - mean;
    m2_re += delta.real() * delta2.real();
    m2_im += delta.imag() * delta2.imag();
  }

  void merge(const ComplexAccumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    double n1 = static_cast<double>(count), n2 = static_cast<double>(o.count), n = n1 + n2;
    std::complex<double> delta = o.mean - mean;
    mean += delta * (n2 / n);
    m2_re += o.m2_re + delta.real() * delta.real() * n1 * n2 / n;
    m2_im += o.m2_im + delta.imag() * delta.imag() * n1 * n2 / n;
    count += o.count;
  }

  // Standard error of the mean, sqrt((var_re + var_im) / count).
  double standard_error() const {
    if (count < 2) return std::numeric_limits<double>::infinity();
    double var = (m2_re + m2_im) / static_cast<double>(count - 1);
    return std::sqrt(var / static_cast<double>(count));
  }
};

struct MCEstimate {
  std::complex<double> mean;
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  MatrixFamily family = MatrixFamily::unitary;
  int dimension = 0;
  std::string word;

  std::string target() const {
    return "tau_" + to_string(family) + "(" + std::to_string(dimension) + "),std(" + word + ")";
  }

  // |mean - value| <= k * standard_error
  bool consistent_with(std::complex<double> value, double k = 4.0) const {
    return std::abs(mean - value) <= k * standard_error;
  }
};

inline constexpr std::uint64_t kMonteCarloBlock = 4096;
inline constexpr std::uint64_t kMinMonteCarloSamples = 100;

namespace detail {

template <typename Matrix>
typename Matrix::Scalar word_trace(const Word& w, const std::vector<int>& active, const std::vector<Matrix>& gens,
                                   const std::vector<Matrix>& adjoints, int n) {
  Matrix acc = Matrix::Identity(n, n);
  for (Letter l : w.letters()) {
    auto slot = static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), l.generator()) - active.begin());
    acc = acc * (l.sign() > 0 ? gens[slot] : adjoints[slot]);
  }
  return acc.trace();
}

}  // namespace detail

inline MCEstimate mc_tau(MatrixFamily family, int n, const Word& w, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers = 0) {
  if (samples < kMinMonteCarloSamples) throw Error("mc_tau needs at least 100 samples");
  if (n < 2) throw Error("mc_tau needs dimension n >= 2");
  const auto active = w.active_generators();
  const std::uint64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  std::vector<ComplexAccumulator> per_block(blocks);

  parallel_chunks(blocks, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t b = begin; b < end; ++b) {
      ComplexAccumulator acc;
      std::uint64_t first = b * kMonteCarloBlock, last = std::min(samples, first + kMonteCarloBlock);
      for (std::uint64_t i = first; i < last; ++i) {
        SampleStream rng(seed, i);
        if (family == MatrixFamily::unitary) {
          std::vector<Eigen::MatrixXcd> gens, adj;
          for (std::size_t s = 0; s < active.size(); ++s) {
            gens.push_back(sample_haar_unitary(n, rng));
            adj.push_back(gens.back().adjoint());
          }
          acc.add(detail::word_trace(w, active, gens, adj, n));
        } else {
          std::vector<Eigen::MatrixXd> gens, adj;
          for (std::size_t s = 0; s < active.size(); ++s) {
            gens.push_back(sample_haar_orthogonal(n, rng));
            adj.push_back(gens.back().transpose());
          }
          acc.add(detail::word_trace(w, active, gens, adj, n));
        }
      }
      per_block[b] = acc;
    }
  });

  ComplexAccumulator total;
  for (const auto& b : per_block) total.merge(b);
  MCEstimate est;
  est.mean = total.mean;
  est.standard_error = total.standard_error();
  est.samples = samples;
  est.seed = seed;
  est.family = family;
  est.dimension = n;
  est.word = to_string(w);
  return est;
}

}  // namespace wordlab
