#pragma once

// The formula-verification suite: twelve numbered checks with time limits,
// shared by `wordlab verify` and the acceptance test binary.

#include <chrono>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wordlab/abelian_toy.hpp"
#include "wordlab/automorphisms.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/haar_mc.hpp"
#include "wordlab/invariant_functions.hpp"
#include "wordlab/representations.hpp"
#include "wordlab/tuple_orbits.hpp"
#include "wordlab/whitehead.hpp"
#include "wordlab/word_measures.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

struct CheckOutcome {
  bool passed = false;
  std::string detail;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;  // outcome passed and within the time limit
  std::string detail;
  double seconds = 0;
  double time_limit = 0;
};

struct VerifyOptions {
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 20240917;
  unsigned workers = 0;
};

namespace detail {

// Collects failures; passes when none were recorded.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && messages_.size() < 5) messages_.push_back(what);
    if (!ok) ++failed_;
  }

  CheckOutcome outcome(const std::string& summary) const {
    std::ostringstream os;
    if (failed_ == 0) {
      os << summary << " (" << checked_ << " checks)";
    } else {
      os << failed_ << " of " << checked_ << " checks failed";
      for (const auto& m : messages_) os << "; " << m;
    }
    return {failed_ == 0, os.str()};
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::vector<std::string> messages_;
};

inline bool equals_rational(const Cyclotomic& z, const Rational& r) { return z == Cyclotomic(r); }

// Exact distribution of x_1 g_1 + ... + x_r g_r on Z/m by convolving the
// pushforwards of each coordinate; counts out of m^r.
inline std::vector<std::uint64_t> cyclic_sum_counts(const AbelianWord& x, std::int64_t m) {
  std::vector<std::uint64_t> dist(static_cast<std::size_t>(m), 0);
  dist[0] = 1;
  for (auto xi : x) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(m), 0);
    std::int64_t r = ((xi % m) + m) % m;
    for (std::int64_t a = 0; a < m; ++a) {
      if (!dist[static_cast<std::size_t>(a)]) continue;
      for (std::int64_t g = 0; g < m; ++g) next[static_cast<std::size_t>((a + r * g) % m)] += dist[static_cast<std::size_t>(a)];
    }
    dist = std::move(next);
  }
  return dist;
}

inline EnumerationOptions enumeration(const VerifyOptions& opt) {
  EnumerationOptions e;
  e.workers = opt.workers;
  return e;
}

inline CheckOutcome check_exact_value(const VerifyOptions& opt) {
  Representation std3 = std_rep(3);
  Cyclotomic v = tau(std3, parse_word("x1^2 x2^3", 2), enumeration(opt));
  return {equals_rational(v, Rational(3, 2)), "tau_{S3,std}(x1^2 x2^3) = " + to_string(v)};
}

inline CheckOutcome check_frobenius(const VerifyOptions& opt) {
  Failures f;
  Word comm = parse_word("[x1,x2]", 2);
  for (const char* spec : {"S3", "S4", "D4", "Q8"}) {
    auto g = make_group(spec);
    auto mu = word_measure(g, comm, enumeration(opt));
    for (const auto& rep : builtin_irreps(g)) {
      Cyclotomic v = tau(mu, rep);
      f.expect(equals_rational(v, Rational(1, rep.dim)),
               std::string(spec) + " " + rep.label + ": tau([x1,x2]) = " + to_string(v));
    }
  }
  return f.outcome("tau([x1,x2]) = 1/dim for every irreducible of S3, S4, D4, Q8");
}

inline CheckOutcome check_frobenius_schur(const VerifyOptions&) {
  Failures f;
  for (const char* spec : {"S3", "S4"}) {
    for (const auto& rep : builtin_irreps(make_group(spec))) {
      f.expect(fs_indicator(rep) == 1, std::string(spec) + " " + rep.label + " indicator is not 1");
    }
  }
  for (const auto& rep : builtin_irreps(make_group("Q8"))) {
    if (rep.dim == 2) f.expect(fs_indicator(rep) == -1, "Q8 2-dim indicator is not -1");
  }
  for (const auto& rep : builtin_irreps(make_group("C3"))) {
    bool trivial = rep.character == std::vector<Cyclotomic>(rep.character.size(), Cyclotomic(1));
    if (!trivial) f.expect(fs_indicator(rep) == 0, "C3 " + rep.label + " indicator is not 0");
  }
  return f.outcome("S3/S4 irreducibles give 1, Q8 2-dim gives -1, C3 nontrivial gives 0");
}

inline const std::vector<std::string>& builtin_table_groups() {
  static const std::vector<std::string> groups{"C2", "C3", "C4", "C5", "S3", "D4", "D5", "Q8", "A4", "S4"};
  return groups;
}

inline CheckOutcome check_surface_words(const VerifyOptions& opt) {
  Failures f;
  for (const auto& spec : builtin_table_groups()) {
    auto g = make_group(spec);
    auto irreps = builtin_irreps(g);
    for (int genus = 1; genus <= 2; ++genus) {
      auto s = word_measure(g, surface_word(SurfaceKind::orientable, genus, 2 * genus), enumeration(opt));
      auto t = word_measure(g, surface_word(SurfaceKind::nonorientable, genus, genus), enumeration(opt));
      for (const auto& rep : irreps) {
        int fs = fs_indicator(rep);
        Cyclotomic vs = tau(s, rep), vt = tau(t, rep);
        f.expect(equals_rational(vs, surface_tau_expected(rep.dim, fs, genus, SurfaceKind::orientable)),
                 spec + " " + rep.label + " s_" + std::to_string(genus) + " = " + to_string(vs));
        f.expect(equals_rational(vt, surface_tau_expected(rep.dim, fs, genus, SurfaceKind::nonorientable)),
                 spec + " " + rep.label + " t_" + std::to_string(genus) + " = " + to_string(vt));
      }
    }
  }
  return f.outcome("tau(s_g) = dim^(1-2g), tau(t_g) = FS^g dim^(1-g) for g = 1, 2 on all built-in irreducibles");
}

inline CheckOutcome check_convolution(const VerifyOptions& opt) {
  Failures f;
  std::mt19937_64 rng(opt.seed + 5);
  for (const char* spec : {"S3", "S4"}) {
    auto g = make_group(spec);
    for (int trial = 0; trial < 50; ++trial) {
      // Split x1..x3 into two nonempty disjoint generator sets.
      std::vector<int> gens{1, 2, 3};
      std::shuffle(gens.begin(), gens.end(), rng);
      std::size_t cut = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
      std::vector<int> left(gens.begin(), gens.begin() + static_cast<long>(cut));
      std::vector<int> right(gens.begin() + static_cast<long>(cut), gens.end());
      std::uniform_int_distribution<std::size_t> len(0, 5);
      Word w1 = random_reduced_word(3, left, len(rng), rng);
      Word w2 = random_reduced_word(3, right, len(rng), rng);
      auto lhs = word_measure(g, w1 * w2, enumeration(opt));
      auto rhs = convolve(word_measure(g, w1, enumeration(opt)), word_measure(g, w2, enumeration(opt)));
      f.expect(measures_equal(lhs, rhs), std::string(spec) + ": " + to_string(w1) + " | " + to_string(w2));
    }
  }
  return f.outcome("mu(w1 w2) = mu(w1) * mu(w2) for 50 disjoint pairs each on S3 and S4");
}

inline CheckOutcome check_nielsen_invariance(const VerifyOptions& opt) {
  Failures f;
  std::mt19937_64 rng(opt.seed + 6);
  for (const char* spec : {"C4", "S3", "S4", "Q8"}) {
    auto g = make_group(spec);
    for (int trial = 0; trial < 100; ++trial) {
      int rank = std::uniform_int_distribution<int>(1, 3)(rng);
      std::size_t length = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      Word w = random_reduced_word(rank, length, rng);
      NielsenMove m = random_elementary_move(rank, rng);
      Word image = apply_nielsen(m, w);
      f.expect(measures_equal(word_measure(g, w, enumeration(opt)), word_measure(g, image, enumeration(opt))),
               std::string(spec) + ": " + to_string(w) + " under " + m.name());
    }
  }
  for (const char* spec : {"C2", "S3"}) {
    auto g = make_group(spec);
    for (int rank = 2; rank <= 3; ++rank) {
      for (const auto& m : elementary_moves(rank)) {
        f.expect(nielsen_pushforward_is_uniform(*g, rank, m),
                 std::string(spec) + " r=" + std::to_string(rank) + " " + m.name() + " is not a bijection");
      }
    }
  }
  return f.outcome("measures invariant for 100 random (word, move) pairs on C4, S3, S4, Q8; moves biject G^r");
}

inline CheckOutcome check_whitehead(const VerifyOptions&) {
  Failures f;
  f.expect(is_primitive(parse_word("x1^2 x2 x1^3", 2)), "x1^2 x2 x1^3 not recognised as primitive");
  f.expect(!is_primitive(parse_word("x1^2 x2^3", 2)), "x1^2 x2^3 reported primitive");
  Word w = parse_word("x^2 y^2 x y^-1", 2);
  f.expect(!same_orbit(w, invert(w)).same_orbit, "x^2 y^2 x y^-1 reported in the orbit of its inverse");
  return f.outcome("x1^2 x2 x1^3 primitive, x1^2 x2^3 not, x^2 y^2 x y^-1 not in the orbit of its inverse");
}

inline CheckOutcome check_monte_carlo(const VerifyOptions& opt) {
  Failures f;
  std::ostringstream os;
  auto run = [&](MatrixFamily fam, int n, const std::string& word, int rank, std::complex<double> target) {
    auto start = std::chrono::steady_clock::now();
    MCEstimate e = mc_tau(fam, n, parse_word(word, rank), opt.mc_samples, opt.seed, opt.workers);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    f.expect(seconds <= 120, e.target() + " took " + std::to_string(seconds) + " s");
    f.expect(e.consistent_with(target), e.target() + " = " + std::to_string(e.mean.real()) + " +- " +
                                            std::to_string(e.standard_error));
    os << e.target() << " = " << e.mean.real() << " (stderr " << e.standard_error << "); ";
  };
  run(MatrixFamily::unitary, 2, "[x1,x2]", 2, 0.5);
  run(MatrixFamily::unitary, 2, "[x1,x2]^2", 2, -2.0 / 3.0);
  run(MatrixFamily::orthogonal, 3, "x1^2", 1, 1.0);
  std::string summary = os.str();
  if (summary.size() >= 2) summary.resize(summary.size() - 2);
  return f.outcome(summary);
}

inline CheckOutcome check_collapse(const VerifyOptions& opt) {
  Failures f;
  std::mt19937_64 rng(opt.seed + 9);
  auto random_vector = [&](std::size_t r) {
    // A common factor makes equal and unequal gcds both frequent.
    std::int64_t scale = std::uniform_int_distribution<std::int64_t>(0, 6)(rng);
    std::int64_t bound = scale == 0 ? 0 : 20 / scale;
    std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
    AbelianWord x(r);
    for (auto& v : x) v = entry(rng) * scale;
    return x;
  };
  std::size_t equal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    AbelianWord x = random_vector(r), y = random_vector(r);
    bool orbit = same_gl_orbit(x, y);
    auto modulus = find_distinguishing_modulus(x, y);
    bool measures_agree = true;
    for (std::int64_t m = 1; m <= 64 && measures_agree; ++m) {
      measures_agree = cyclic_sum_counts(x, m) == cyclic_sum_counts(y, m);
    }
    equal += orbit;
    f.expect(orbit == !modulus.has_value() && orbit == measures_agree, "conditions disagree");
    if (modulus) {
      f.expect(cyclic_sum_counts(x, *modulus) != cyclic_sum_counts(y, *modulus), "witness modulus does not separate");
    }
  }
  return f.outcome("same gcd, no separating prime power and equal measures on Z/m (m <= 64) agree on 500 pairs (" +
                   std::to_string(equal) + " in one orbit)");
}

inline CheckOutcome check_round_trip(const VerifyOptions& opt) {
  Failures f;
  std::mt19937_64 rng(opt.seed + 10);
  for (const char* spec : {"S3", "S4"}) {
    auto g = make_group(spec);
    auto irreps = builtin_irreps(g);
    for (int trial = 0; trial < 50; ++trial) {
      int rank = std::uniform_int_distribution<int>(1, 3)(rng);
      Word w = random_reduced_word(rank, std::uniform_int_distribution<std::size_t>(0, 6)(rng), rng);
      auto mu = word_measure(g, w, enumeration(opt));
      std::vector<Cyclotomic> taus;
      for (const auto& rep : irreps) taus.push_back(tau(mu, rep));
      f.expect(measures_equal(measure_from_taus(irreps, taus), mu), std::string(spec) + ": " + to_string(w));
    }
  }
  return f.outcome("measures recovered exactly from tau values for 50 words each on S3 and S4");
}

inline CheckOutcome check_psd(const VerifyOptions& opt) {
  Failures f;
  std::mt19937_64 rng(opt.seed + 11);
  std::vector<InvariantFunction> functions{InvariantFunction::delta_identity(), InvariantFunction::trivial(),
                                           InvariantFunction::characteristic_kernel(make_group("C2"))};
  for (auto& rep : builtin_irreps(make_group("S3"))) functions.push_back(InvariantFunction::tau_representation(rep));
  double least = 0;
  for (int trial = 0; trial < 3; ++trial) {
    std::set<Word> distinct;
    while (distinct.size() < 12) {
      distinct.insert(random_reduced_word(2, std::uniform_int_distribution<std::size_t>(0, 5)(rng), rng));
    }
    std::vector<Word> words(distinct.begin(), distinct.end());
    std::shuffle(words.begin(), words.end(), rng);
    for (const auto& fn : functions) {
      auto report = psd_report(fn, words, 1e-9);
      least = std::min(least, report.least_eigenvalue);
      f.expect(report.positive_semidefinite,
               fn.name() + " least eigenvalue " + std::to_string(report.least_eigenvalue));
    }
  }
  std::ostringstream os;
  os << "Gram matrices over 12 random words are PSD for Delta_e, Trivial, CharKernel(C2), TauRep(S3, each irrep); "
        "least eigenvalue "
     << least;
  return f.outcome(os.str());
}

inline CheckOutcome check_tuple_orbits(const VerifyOptions& opt) {
  Failures f;
  for (auto [spec, rank] : std::vector<std::pair<std::string, int>>{{"C2", 1}, {"C3", 1}, {"C2", 2}, {"S3", 2}, {"Q8", 2}, {"S3", 3}}) {
    auto report = orbit_decomposition(make_group(spec), rank);
    std::uint64_t sum = 0;
    for (const auto& o : report.orbits) sum += o.size;
    f.expect(sum == report.total_tuples, spec + ": orbit sizes do not sum to |G|^r");
  }
  auto s3 = orbit_decomposition(make_group("S3"), 2);
  f.expect(s3.epi_orbit_count == 1 && s3.epi_tuple_count == 18, "Epi(F2,S3) is not a single orbit of 18 pairs");

  auto g = make_group("S3");
  Representation two_dim;
  for (auto& rep : builtin_irreps(g))
    if (rep.dim == 2) two_dim = rep;
  std::mt19937_64 rng(opt.seed + 12);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) = {normal(rng), normal(rng)};
    ComplexMatrix avg = schur_average(two_dim, a);
    ComplexMatrix expected = ComplexMatrix::Identity(2, 2) * (a.trace() / 2.0);
    f.expect((avg - expected).cwiseAbs().maxCoeff() <= 1e-9, "Schur average differs from (tr A/2) Id");
  }
  return f.outcome("orbit sizes sum to |G|^r, Epi(F2,S3) is one orbit, Schur averages are (tr A/2) Id");
}

struct CheckSpec {
  int id;
  std::string name;
  double time_limit;
  std::function<CheckOutcome(const VerifyOptions&)> run;
};

inline const std::vector<CheckSpec>& check_specs() {
  static const std::vector<CheckSpec> specs{
      {1, "exact value", 1, check_exact_value},
      {2, "Frobenius", 5, check_frobenius},
      {3, "Frobenius-Schur", 5, check_frobenius_schur},
      {4, "surface words", 30, check_surface_words},
      {5, "convolution", 60, check_convolution},
      {6, "Nielsen invariance", 120, check_nielsen_invariance},
      {7, "Whitehead", 60, check_whitehead},
      {8, "Monte Carlo", 360, check_monte_carlo},  // 120 s per estimate, checked inside
      {9, "collapse theorem", 60, check_collapse},
      {10, "Fourier round trip", 60, check_round_trip},
      {11, "positive definiteness", 60, check_psd},
      {12, "tuple orbits and Schur averaging", 30, check_tuple_orbits},
  };
  return specs;
}

}  // namespace detail

inline std::size_t verify_check_count() { return detail::check_specs().size(); }

// Runs check `id` (1-based). Exceptions count as failures.
inline CheckResult run_check(int id, const VerifyOptions& opt = {}) {
  const auto& specs = detail::check_specs();
  if (id < 1 || id > static_cast<int>(specs.size())) throw Error("no check numbered " + std::to_string(id));
  const auto& spec = specs[static_cast<std::size_t>(id - 1)];
  CheckResult res;
  res.id = spec.id;
  res.name = spec.name;
  res.time_limit = spec.time_limit;
  auto start = std::chrono::steady_clock::now();
  CheckOutcome out;
  try {
    out = spec.run(opt);
  } catch (const std::exception& e) {
    out = {false, std::string("error: ") + e.what()};
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.detail = out.detail;
  res.passed = out.passed && res.seconds <= res.time_limit;
  if (out.passed && !res.passed) res.detail += "; exceeded the time limit";
  return res;
}

inline std::vector<CheckResult> run_all_checks(const VerifyOptions& opt = {}) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= static_cast<int>(verify_check_count()); ++id) out.push_back(run_check(id, opt));
  return out;
}

}  // namespace wordlab
