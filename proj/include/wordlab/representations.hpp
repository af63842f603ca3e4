#pragma once

// Characters and unitary representations of catalog groups, and the
// expected-character functions tau_{G,pi}(w) = E[chi_pi(w(g))].

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/catalog.hpp"
#include "wordlab/cyclotomic.hpp"
#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/word_measures.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxCharacterTableClasses = 64;

struct Representation {
  GroupPtr group;
  int dim = 1;
  std::string label;
  std::vector<Cyclotomic> character;  // one value per conjugacy class
  // One unitary matrix per element, when an explicit model is known.
  std::optional<std::vector<ComplexMatrix>> matrices;
  bool irreducible = false;

  bool has_matrices() const noexcept { return matrices.has_value(); }
};

namespace detail {

inline std::vector<int> cycle_type(const std::vector<int>& p) {
  std::vector<int> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Murnaghan-Nakayama on beta-sets: remove rim hooks of the given lengths.
inline long long mn_character(std::vector<int> beta, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return 1;
  int k = cycles[next];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i], t = b - k;
    if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int between = 0;
    for (int c : beta) between += (c > t && c < b);
    std::vector<int> moved = beta;
    moved[i] = t;
    long long sub = mn_character(std::move(moved), cycles, next + 1);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

inline long long symmetric_character(const std::vector<int>& partition, const std::vector<int>& cycles) {
  std::vector<int> beta;
  int len = static_cast<int>(partition.size());
  for (int i = 0; i < len; ++i) beta.push_back(partition[static_cast<std::size_t>(i)] + (len - 1 - i));
  return mn_character(std::move(beta), cycles, 0);
}

inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::string partition_label(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

inline ComplexMatrix permutation_matrix(const std::vector<int>& p) {
  auto n = static_cast<Eigen::Index>(p.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(p[static_cast<std::size_t>(i)], i) = 1.0;
  return m;
}

// Orthonormal basis (columns) of the sum-zero subspace of C^n.
inline Eigen::MatrixXd sum_zero_basis(int n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) b(i, k - 1) = 1.0 / norm;
    b(k, k - 1) = -static_cast<double>(k) / norm;
  }
  return b;
}

// A factor-level irreducible: values per factor element, optional matrices.
struct FactorIrrep {
  std::string label;
  int dim = 1;
  std::vector<Cyclotomic> values;
  std::optional<std::vector<ComplexMatrix>> matrices;
};

inline ComplexMatrix scalar(std::complex<double> z) {
  ComplexMatrix m(1, 1);
  m(0, 0) = z;
  return m;
}

inline FactorIrrep linear_irrep(std::string label, std::vector<Cyclotomic> values) {
  FactorIrrep r{std::move(label), 1, std::move(values), std::vector<ComplexMatrix>{}};
  for (const auto& v : r.values) r.matrices->push_back(scalar(v.to_complex()));
  return r;
}

inline std::vector<FactorIrrep> cyclic_irreps(const FactorModel& m) {
  int n = m.param;
  std::vector<FactorIrrep> out;
  for (int k = 0; k < n; ++k) {
    std::vector<Cyclotomic> v;
    for (int j = 0; j < n; ++j) v.push_back(Cyclotomic::root_of_unity(n, static_cast<long long>(j) * k));
    out.push_back(linear_irrep(k == 0 ? "triv" : "chi" + std::to_string(k), std::move(v)));
  }
  return out;
}

inline std::vector<FactorIrrep> dihedral_irreps(const FactorModel& m) {
  int n = m.param;
  std::vector<FactorIrrep> out;
  auto linear = [&](const std::string& name, int rot_sign, int refl_sign) {
    std::vector<Cyclotomic> v;
    for (auto [j, f] : m.dihedral) {
      long long s = (rot_sign < 0 && j % 2) ? -1 : 1;
      if (f) s *= refl_sign;
      v.emplace_back(s);
    }
    out.push_back(linear_irrep(name, std::move(v)));
  };
  linear("triv", 1, 1);
  linear("det", 1, -1);
  if (n % 2 == 0) {
    linear("alt", -1, 1);
    linear("alt_det", -1, -1);
  }
  for (int h = 1; 2 * h < n; ++h) {
    FactorIrrep r{"rho" + std::to_string(h), 2, {}, std::vector<ComplexMatrix>{}};
    for (auto [j, f] : m.dihedral) {
      r.values.push_back(f ? Cyclotomic(0)
                           : Cyclotomic::root_of_unity(n, static_cast<long long>(h) * j) +
                                 Cyclotomic::root_of_unity(n, -static_cast<long long>(h) * j));
      double th = 2.0 * std::numbers::pi * h * j / n;
      ComplexMatrix rot(2, 2);
      rot << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
      if (f) {
        ComplexMatrix refl(2, 2);
        refl << 1, 0, 0, -1;
        rot = rot * refl;
      }
      r.matrices->push_back(rot);
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<FactorIrrep> symmetric_irreps(const FactorModel& m) {
  int n = m.param;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(n, n, cur, parts);
  std::vector<FactorIrrep> out;
  Eigen::MatrixXd basis = n >= 2 ? sum_zero_basis(n) : Eigen::MatrixXd();
  for (const auto& lam : parts) {
    FactorIrrep r;
    r.label = partition_label(lam);
    for (const auto& p : m.permutations) r.values.emplace_back(symmetric_character(lam, cycle_type(p)));
    r.dim = static_cast<int>(symmetric_character(lam, std::vector<int>(static_cast<std::size_t>(n), 1)));
    bool standard = n >= 3 && lam.size() == 2 && lam[1] == 1;
    bool sign_standard = n >= 3 && lam.size() == static_cast<std::size_t>(n - 1) && lam[0] == 2;
    if (r.dim == 1) {
      r.matrices.emplace();
      for (const auto& v : r.values) r.matrices->push_back(scalar(v.to_complex()));
    } else if (standard || sign_standard) {
      r.matrices.emplace();
      for (const auto& p : m.permutations) {
        ComplexMatrix mat = basis.transpose().cast<std::complex<double>>() * permutation_matrix(p) *
                            basis.cast<std::complex<double>>();
        if (sign_standard && !is_even(p)) mat = -mat;
        r.matrices->push_back(mat);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<FactorIrrep> alternating_irreps(const FactorModel& m) {
  int n = m.param;
  if (n > 4) throw Unsupported("character table of A" + std::to_string(n) + " is not built in");
  std::vector<FactorIrrep> out;
  if (n == 2) {
    out.push_back(linear_irrep("triv", {Cyclotomic(1)}));
    return out;
  }
  // A3 and A4 map onto C3; t is the 3-cycle 0 -> 1 -> 2 -> 0.
  std::vector<int> t(static_cast<std::size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  t[0] = 1;
  t[1] = 2;
  t[2] = 0;
  auto in_kernel = [n](const std::vector<int>& p) {
    if (n == 3) return cycle_type(p) == std::vector<int>{1, 1, 1};
    auto ct = cycle_type(p);
    return ct == std::vector<int>{1, 1, 1, 1} || ct == std::vector<int>{2, 2};
  };
  std::vector<int> exps;
  for (const auto& p : m.permutations) {
    std::vector<int> q = p;
    int k = 0;
    // Find k with p * t^-k in the kernel.
    std::vector<int> tinv(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) tinv[static_cast<std::size_t>(t[i])] = static_cast<int>(i);
    while (!in_kernel(q)) {
      q = compose_perm(q, tinv);
      ++k;
    }
    exps.push_back(k % 3);
  }
  for (int h = 0; h < 3; ++h) {
    std::vector<Cyclotomic> v;
    for (int k : exps) v.push_back(Cyclotomic::root_of_unity(3, static_cast<long long>(h) * k));
    out.push_back(linear_irrep(h == 0 ? "triv" : (h == 1 ? "omega" : "omega2"), std::move(v)));
  }
  if (n == 4) {
    FactorIrrep r{"std", 3, {}, std::vector<ComplexMatrix>{}};
    Eigen::MatrixXd basis = sum_zero_basis(4);
    for (const auto& p : m.permutations) {
      long long fixed = 0;
      for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == static_cast<int>(i);
      r.values.emplace_back(fixed - 1);
      r.matrices->push_back(basis.transpose().cast<std::complex<double>>() * permutation_matrix(p) *
                            basis.cast<std::complex<double>>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<FactorIrrep> quaternion_irreps(const FactorModel& m) {
  std::vector<FactorIrrep> out;
  static constexpr const char* kNames[] = {"triv", "i", "j", "k"};
  for (int a = 0; a < 4; ++a) {
    std::vector<Cyclotomic> v;
    for (int label : m.quaternion) {
      int u = label / 2;
      v.emplace_back((a == 0 || u == 0 || u == a) ? 1 : -1);
    }
    out.push_back(linear_irrep(kNames[a], std::move(v)));
  }
  using C = std::complex<double>;
  const C I(0, 1);
  ComplexMatrix units[4];
  units[0] = ComplexMatrix::Identity(2, 2);
  units[1].resize(2, 2);
  units[1] << I, 0, 0, -I;
  units[2].resize(2, 2);
  units[2] << 0, 1, -1, 0;
  units[3].resize(2, 2);
  units[3] << 0, I, I, 0;
  FactorIrrep r{"rho2", 2, {}, std::vector<ComplexMatrix>{}};
  for (int label : m.quaternion) {
    int u = label / 2;
    bool neg = label % 2;
    r.values.emplace_back(u == 0 ? (neg ? -2 : 2) : 0);
    r.matrices->push_back(neg ? ComplexMatrix(-units[u]) : units[u]);
  }
  out.push_back(std::move(r));
  return out;
}

inline std::vector<FactorIrrep> factor_irreps(const FactorModel& m) {
  switch (m.kind) {
    case FactorModel::Kind::cyclic: return cyclic_irreps(m);
    case FactorModel::Kind::dihedral: return dihedral_irreps(m);
    case FactorModel::Kind::symmetric: return symmetric_irreps(m);
    case FactorModel::Kind::alternating: return alternating_irreps(m);
    case FactorModel::Kind::quaternion: return quaternion_irreps(m);
  }
  throw Unsupported("unknown factor kind");
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

// Sum over classes of |c| chi(c) conj(psi(c)), divided by |G|.
inline std::complex<double> character_inner_product(const FiniteGroup& g, const std::vector<Cyclotomic>& chi,
                                                    const std::vector<Cyclotomic>& psi) {
  std::complex<double> s = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    s += static_cast<double>(g.class_size(c)) * chi[c].to_complex() * std::conj(psi[c].to_complex());
  }
  return s / static_cast<double>(g.order());
}

// Checks sum dim^2 = |G| exactly, one irreducible per class, and orthonormality
// of the characters within 1e-9.
inline void validate_character_table(const FiniteGroup& g, const std::vector<Representation>& irreps) {
  if (irreps.size() != g.class_count()) {
    throw InvariantViolation("character table of " + g.name() + " has " + std::to_string(irreps.size()) +
                             " characters for " + std::to_string(g.class_count()) + " classes");
  }
  std::size_t dims = 0;
  for (const auto& r : irreps) {
    if (r.character.size() != g.class_count()) throw InvariantViolation("character has wrong number of values");
    if (!(r.character[0] == Cyclotomic(r.dim))) throw InvariantViolation("character at identity differs from dim");
    dims += static_cast<std::size_t>(r.dim) * static_cast<std::size_t>(r.dim);
  }
  if (dims != g.order()) throw InvariantViolation("sum of squared dimensions differs from |G| for " + g.name());
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    for (std::size_t j = 0; j < irreps.size(); ++j) {
      auto ip = character_inner_product(g, irreps[i].character, irreps[j].character);
      if (std::abs(ip - std::complex<double>(i == j ? 1.0 : 0.0)) > 1e-9) {
        throw InvariantViolation("characters of " + g.name() + " are not orthonormal");
      }
    }
  }
}

// Complete list of irreducible representations of a catalog group, trivial
// first, then by dimension. Characters are exact; explicit matrices are
// attached where a model is built in.
inline std::vector<Representation> builtin_irreps(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  if (g.factors().empty()) throw Unsupported("no built-in character table for imported group " + g.name());
  if (g.class_count() > kMaxCharacterTableClasses) {
    throw Unsupported("built-in character tables are limited to " + std::to_string(kMaxCharacterTableClasses) +
                      " classes");
  }
  std::vector<std::vector<detail::FactorIrrep>> per_factor;
  for (const auto& f : g.factors()) per_factor.push_back(detail::factor_irreps(*f));

  std::vector<Representation> out;
  std::vector<std::size_t> pick(per_factor.size(), 0);
  for (;;) {
    Representation rep;
    rep.group = group;
    rep.irreducible = true;
    bool with_matrices = true;
    for (std::size_t f = 0; f < pick.size(); ++f) {
      const auto& fi = per_factor[f][pick[f]];
      rep.dim *= fi.dim;
      rep.label += (f ? "x" : "") + fi.label;
      with_matrices = with_matrices && fi.matrices.has_value();
    }
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      Element e = g.class_representative(c);
      Cyclotomic v(1);
      for (std::size_t f = 0; f < pick.size(); ++f) v *= per_factor[f][pick[f]].values[g.component(e, f)];
      rep.character.push_back(v);
    }
    if (with_matrices) {
      rep.matrices.emplace();
      for (std::size_t e = 0; e < g.order(); ++e) {
        ComplexMatrix m = ComplexMatrix::Identity(1, 1);
        for (std::size_t f = 0; f < pick.size(); ++f) {
          m = detail::kron(m, (*per_factor[f][pick[f]].matrices)[g.component(static_cast<Element>(e), f)]);
        }
        rep.matrices->push_back(std::move(m));
      }
    }
    out.push_back(std::move(rep));
    std::size_t f = pick.size();
    while (f-- > 0) {
      if (++pick[f] < per_factor[f].size()) break;
      pick[f] = 0;
    }
    if (f == static_cast<std::size_t>(-1)) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dim < b.dim; });
  validate_character_table(g, out);
  return out;
}

// The n-dimensional permutation representation of S_n (character = number of
// fixed points). Reducible: it contains the trivial representation.
inline Representation std_rep(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  if (g.factors().size() != 1 || g.factors()[0]->kind != FactorModel::Kind::symmetric) {
    throw Unsupported("the standard permutation representation needs a group S<n>");
  }
  const auto& model = *g.factors()[0];
  if (model.param < 2) throw Unsupported("std_rep requires n >= 2");
  Representation rep;
  rep.group = group;
  rep.dim = model.param;
  rep.label = "std";
  rep.irreducible = false;
  rep.matrices.emplace();
  for (const auto& p : model.permutations) rep.matrices->push_back(detail::permutation_matrix(p));
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& p = model.permutations[g.class_representative(c)];
    long long fixed = 0;
    for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == static_cast<int>(i);
    rep.character.emplace_back(fixed);
  }
  return rep;
}

inline Representation std_rep(int n) {
  if (n < 2 || n > 8) throw Unsupported("std_rep requires 2 <= n <= 8");
  return std_rep(make_group("S" + std::to_string(n)));
}

// Expected character value under a class distribution.
inline Cyclotomic tau(const ClassDistribution& mu, const Representation& rep) {
  if (!same_group(*mu.group(), *rep.group)) throw GroupMismatch("representation and measure on different groups");
  Cyclotomic s(0);
  for (std::size_t c = 0; c < rep.character.size(); ++c) {
    if (mu.weight(c) != 0) s += Cyclotomic(mu.weight(c)) * rep.character[c];
  }
  return s;
}

inline Cyclotomic tau(const Representation& rep, const Word& w, const EnumerationOptions& opt = {}) {
  return tau(word_measure(rep.group, w, opt), rep);
}

// tau(x1^2); 1, 0 or -1 for irreducible input.
inline int fs_indicator(const Representation& rep) {
  Cyclotomic v = tau(rep, parse_word("x1^2", 1));
  if (v == Cyclotomic(1)) return 1;
  if (v == Cyclotomic(0)) return 0;
  if (v == Cyclotomic(-1)) return -1;
  throw InvariantViolation("Frobenius-Schur value " + to_string(v) + " of " + rep.label + " is not in {-1,0,1}");
}

// Closed forms for irreducible representations: 1/dim^(2g-1) for s_g and
// fs^g / dim^(g-1) for t_g.
inline Rational surface_tau_expected(int dim, int fs, int genus, SurfaceKind kind) {
  if (genus < 1) throw Error("surface genus must be positive");
  if (dim < 1) throw Error("dimension must be positive");
  if (kind == SurfaceKind::orientable) return Rational(1) / pow(Rational(dim), static_cast<unsigned>(2 * genus - 1));
  Rational num = pow(Rational(fs), static_cast<unsigned>(genus));
  return num / pow(Rational(dim), static_cast<unsigned>(genus - 1));
}

inline constexpr double kSchurTolerance = 1e-9;

// (1/|G|) sum_g pi(g) A pi(g)^-1; throws unless the result is (tr A / dim) Id.
inline ComplexMatrix schur_average(const Representation& rep, const ComplexMatrix& a) {
  if (!rep.has_matrices()) throw Unsupported("schur_average needs explicit matrices for " + rep.label);
  if (a.rows() != rep.dim || a.cols() != rep.dim) throw Error("matrix size differs from representation dimension");
  ComplexMatrix sum = ComplexMatrix::Zero(rep.dim, rep.dim);
  for (const auto& m : *rep.matrices) sum += m * a * m.adjoint();
  sum /= static_cast<double>(rep.matrices->size());
  ComplexMatrix expected = ComplexMatrix::Identity(rep.dim, rep.dim) * (a.trace() / static_cast<double>(rep.dim));
  double dev = (sum - expected).cwiseAbs().maxCoeff();
  if (dev > kSchurTolerance) {
    throw InvariantViolation("Schur average deviates from a scalar matrix by " + std::to_string(dev) +
                             " (representation reducible or matrices inconsistent)");
  }
  return sum;
}

// Inverts tau: mu(c) = |c|/|G| * sum_pi tau_pi conj(chi_pi(c)).
inline ClassDistribution measure_from_taus(const std::vector<Representation>& irreps, const std::vector<Cyclotomic>& taus) {
  if (irreps.empty()) throw InvariantViolation("empty irreducible list");
  const GroupPtr& group = irreps.front().group;
  const FiniteGroup& g = *group;
  if (taus.size() != irreps.size()) throw InvariantViolation("one tau value per irreducible required");
  std::size_t dims = 0;
  for (const auto& r : irreps) {
    if (!r.irreducible) throw InvariantViolation("measure_from_taus needs irreducible representations");
    dims += static_cast<std::size_t>(r.dim) * static_cast<std::size_t>(r.dim);
  }
  if (dims != g.order() || irreps.size() != g.class_count()) {
    throw InvariantViolation("incomplete list of irreducible representations for " + g.name());
  }
  std::vector<Rational> weights;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Cyclotomic s(0);
    for (std::size_t i = 0; i < irreps.size(); ++i) s += taus[i] * irreps[i].character[c].conj();
    s *= Cyclotomic(Rational(g.class_size(c), g.order()));
    if (!s.is_rational()) throw InvariantViolation("tau values give a non-real class weight");
    Rational w = s.rational();
    if (w < 0) throw InvariantViolation("tau values give a negative class weight");
    weights.push_back(w);
  }
  return ClassDistribution(group, std::move(weights));
}

}  // namespace wordlab
