#pragma once

// Functions on the free group that are invariant under automorphisms, and a
// numerical positive semi-definiteness check of their Gram matrices.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wordlab/cyclotomic.hpp"
#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"
#include "wordlab/representations.hpp"
#include "wordlab/word_measures.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

enum class InvariantKind { delta_identity, trivial, characteristic_kernel, tau_representation };

inline std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::delta_identity: return "Delta_e";
    case InvariantKind::trivial: return "Trivial";
    case InvariantKind::characteristic_kernel: return "CharKernel";
    case InvariantKind::tau_representation: return "TauRep";
  }
  return "?";
}

// True iff w(g) = e for every substitution of elements of h.
inline bool vanishes_on(const FiniteGroup& h, const Word& w, const EnumerationOptions& opt = {}) {
  auto counts = word_class_counts(h, w, opt);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return counts[0] == total;
}

class InvariantFunction {
 public:
  static InvariantFunction delta_identity() { return InvariantFunction(InvariantKind::delta_identity); }
  static InvariantFunction trivial() { return InvariantFunction(InvariantKind::trivial); }

  static InvariantFunction characteristic_kernel(GroupPtr h) {
    if (!h) throw Error("CharKernel needs a finite group");
    InvariantFunction f(InvariantKind::characteristic_kernel);
    f.group_ = std::move(h);
    return f;
  }

  // normalized: divide by the dimension so that the value at e is 1.
  static InvariantFunction tau_representation(Representation rep, bool normalized = false) {
    InvariantFunction f(InvariantKind::tau_representation);
    f.group_ = rep.group;
    f.rep_ = std::make_shared<const Representation>(std::move(rep));
    f.normalized_ = normalized;
    return f;
  }

  InvariantKind kind() const noexcept { return kind_; }
  const GroupPtr& group() const noexcept { return group_; }
  bool normalized() const noexcept { return normalized_; }

  void set_options(const EnumerationOptions& opt) { opt_ = opt; }

  std::string name() const {
    switch (kind_) {
      case InvariantKind::characteristic_kernel: return "CharKernel(" + group_->name() + ")";
      case InvariantKind::tau_representation:
        return "TauRep(" + group_->name() + "," + rep_->label + (normalized_ ? ",normalized" : "") + ")";
      default: return to_string(kind_);
    }
  }

  Cyclotomic operator()(const Word& w) const {
    switch (kind_) {
      case InvariantKind::delta_identity: return Cyclotomic(w.empty() ? 1 : 0);
      case InvariantKind::trivial: return Cyclotomic(1);
      case InvariantKind::characteristic_kernel: return Cyclotomic(vanishes_on(*group_, w, opt_) ? 1 : 0);
      case InvariantKind::tau_representation: {
        Cyclotomic v = tau(*rep_, w, opt_);
        if (normalized_) v *= Cyclotomic(Rational(1, rep_->dim));
        return v;
      }
    }
    throw Error("unknown invariant function");
  }

 private:
  explicit InvariantFunction(InvariantKind k) : kind_(k) {}

  InvariantKind kind_;
  GroupPtr group_;
  std::shared_ptr<const Representation> rep_;
  bool normalized_ = false;
  EnumerationOptions opt_;
};

struct PsdReport {
  bool positive_semidefinite = false;
  double least_eigenvalue = 0;
  Eigen::MatrixXcd gram;
};

// Gram matrix M(i, j) = f(w_i w_j^-1), Hermitian eigen-solve.
inline PsdReport psd_report(const InvariantFunction& f, const std::vector<Word>& words, double tolerance = 1e-9) {
  const auto n = static_cast<Eigen::Index>(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (words[i] == words[j]) throw Error("psd_check needs distinct words");
  PsdReport rep;
  rep.gram = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Word& a = words[static_cast<std::size_t>(i)];
      const Word& b = words[static_cast<std::size_t>(j)];
      rep.gram(i, j) = f(a * invert(b)).to_complex();
    }
  }
  double asym = n ? (rep.gram - rep.gram.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (asym > tolerance) {
    throw InvariantViolation(f.name() + " has a non-Hermitian Gram matrix (deviation " + std::to_string(asym) + ")");
  }
  if (n == 0) {
    rep.positive_semidefinite = true;
    return rep;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rep.gram, Eigen::EigenvaluesOnly);
  rep.least_eigenvalue = solver.eigenvalues().minCoeff();
  rep.positive_semidefinite = rep.least_eigenvalue >= -tolerance;
  return rep;
}

inline bool psd_check(const InvariantFunction& f, const std::vector<Word>& words, double tolerance = 1e-9) {
  return psd_report(f, words, tolerance).positive_semidefinite;
}

}  // namespace wordlab
