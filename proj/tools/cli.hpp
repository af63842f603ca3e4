#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it
// in-process.

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordlab/config.hpp"
#include "wordlab/serialization.hpp"
#include "wordlab/verify.hpp"
#include "wordlab/wordlab.hpp"

namespace wordlab::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Settings {
  RunConfig config;
  std::string format = "json";
  std::optional<int> rank;
  std::string group;
  std::string rep = "all";
  std::size_t max_order = 24;
  int dimension = 2;
  std::string family = "U";
  std::int64_t modulus = 2;
  bool exact = false;
  std::vector<int> checks;
  std::optional<std::uint64_t> samples;
};

inline std::string json_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flat "key  value" rendering; arrays of objects become one line per entry.
inline void print_table(const Json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it->is_structured()) {
        print_table(*it, out, key);
      } else {
        out << std::left << std::setw(28) << key << ' ' << json_scalar(*it) << '\n';
      }
    }
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& v) { return !v.is_structured(); });
    if (scalars) {
      std::string line;
      for (const auto& v : j) line += (line.empty() ? "" : ", ") + json_scalar(v);
      out << std::left << std::setw(28) << prefix << ' ' << line << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_object()) {
        std::string line;
        for (auto it = j[i].begin(); it != j[i].end(); ++it) {
          line += (line.empty() ? "" : "  ") + it.key() + "=" + (it->is_structured() ? it->dump() : json_scalar(*it));
        }
        out << prefix << '[' << i << "]  " << line << '\n';
      } else {
        print_table(j[i], out, prefix + "[" + std::to_string(i) + "]");
      }
    }
  } else {
    out << prefix << ' ' << json_scalar(j) << '\n';
  }
}

inline void emit(const Json& j, const Settings& s, std::ostream& out) {
  if (s.config.format == OutputFormat::table) {
    print_table(j, out);
  } else {
    out << j.dump() << '\n';
  }
}

inline int resolve_rank(const Settings& s, std::initializer_list<std::string> words) {
  if (s.rank) return *s.rank;
  int r = 1;
  for (const auto& w : words) r = std::max(r, infer_rank(w));
  return r;
}

inline GroupPtr require_group(const Settings& s) {
  if (s.group.empty()) throw ParseError("a group is required (-g/--group)");
  return resolve_group(s.group, s.config.order_cap);
}

inline Json tau_value_json(const Cyclotomic& v) {
  if (v.is_rational()) return to_string(v.rational());
  return to_json(v);
}

// Representations selected by --rep: "std", "all", a 0-based index into the
// irreducible list, or an irreducible's label.
inline std::vector<Representation> select_reps(const GroupPtr& g, const std::string& rep) {
  if (rep == "std") return {std_rep(g)};
  auto irreps = builtin_irreps(g);
  if (rep == "all") return irreps;
  if (!rep.empty() && std::all_of(rep.begin(), rep.end(), [](unsigned char c) { return std::isdigit(c); })) {
    std::size_t i = std::stoul(rep);
    if (i >= irreps.size()) throw ParseError("representation index " + rep + " out of range");
    return {irreps[i]};
  }
  for (const auto& r : irreps)
    if (r.label == rep) return {r};
  throw ParseError("unknown representation '" + rep + "'");
}

inline Json verify_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"time_limit", r.time_limit},
                      {"detail", r.detail}});
  }
  return Json{{"passed", all}, {"checks", std::move(checks)}};
}

inline void print_verify_table(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(34) << r.name
        << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << " s  " << r.detail << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word measures, invariant functions and automorphism orbits of free-group words", "wordlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--budget", s.config.budget, "Enumeration budget in word evaluations")->capture_default_str();
  app.add_option("--workers", s.config.workers, "Worker threads (0: WORDLAB_WORKERS or hardware)")
      ->capture_default_str();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--order-cap", s.config.order_cap, "Largest group order that may be built")->capture_default_str();

  std::string w1, w2;
  auto add_rank = [&](CLI::App* sub) { sub->add_option("-r,--rank", s.rank, "Rank of the free group")->check(CLI::Range(1, 64)); };
  auto add_group = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-g,--group", s.group, "Group spec (C4, D5, S3, A4, Q8, S3xC2) or a JSON table file");
    if (required) o->required();
  };

  auto* measure = app.add_subcommand("measure", "Exact word measure on a finite group");
  measure->add_option("word", w1)->required();
  add_rank(measure);
  add_group(measure, true);

  auto* tau_cmd = app.add_subcommand("tau", "Expected character value tau_{G,pi}(w)");
  tau_cmd->add_option("word", w1)->required();
  add_rank(tau_cmd);
  add_group(tau_cmd, true);
  tau_cmd->add_option("--rep", s.rep, "std, all, an irreducible index or label")->capture_default_str();

  auto* fs = app.add_subcommand("fs", "Frobenius-Schur indicators of the irreducibles");
  add_group(fs, true);
  fs->add_option("--rep", s.rep, "all, an irreducible index or label")->capture_default_str();

  auto* table = app.add_subcommand("characters", "Character table of a catalog group");
  add_group(table, true);

  auto* dist = app.add_subcommand("distinguish", "Search the catalog for a group separating two word measures");
  dist->add_option("w1", w1)->required();
  dist->add_option("w2", w2)->required();
  add_rank(dist);
  dist->add_option("--max-order", s.max_order, "Largest group order searched")->capture_default_str();

  auto* prim = app.add_subcommand("primitive", "Is the word part of a free basis?");
  prim->add_option("word", w1)->required();
  add_rank(prim);

  auto* orbit = app.add_subcommand("orbit", "Are two words in the same Aut(F_r) orbit?");
  orbit->add_option("w1", w1)->required();
  orbit->add_option("w2", w2)->required();
  add_rank(orbit);
  orbit->add_flag("--exact", s.exact, "Also print an automorphism carrying w1 to w2");

  auto* orbits = app.add_subcommand("orbits", "Nielsen orbits on G^r");
  add_group(orbits, true);
  add_rank(orbits);
  orbits->add_option("--tuple-budget", s.config.tuple_budget, "Largest |G|^r explored")->capture_default_str();

  auto* ztoy = app.add_subcommand("ztoy", "Exponent vectors in Z^r under GL_r(Z)");
  ztoy->require_subcommand(1);
  auto* zorbit = ztoy->add_subcommand("orbit", "Same GL_r(Z) orbit? Gives a separating modulus otherwise");
  zorbit->add_option("x", w1, "Comma-separated integers")->required();
  zorbit->add_option("y", w2, "Comma-separated integers")->required();
  auto* zmeasure = ztoy->add_subcommand("measure", "Distribution of x.g on Z/m");
  zmeasure->add_option("x", w1, "Comma-separated integers")->required();
  zmeasure->add_option("-m,--modulus", s.modulus, "Modulus m")->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000}))->capture_default_str();

  auto* mc = app.add_subcommand("mctau", "Monte Carlo tau on U(n) or O(n)");
  mc->add_option("word", w1)->required();
  add_rank(mc);
  mc->add_option("--family", s.family, "U or O")->check(CLI::IsMember({"U", "O", "u", "o"}))->capture_default_str();
  mc->add_option("-n,--dim", s.dimension, "Matrix size")->check(CLI::Range(2, 64))->capture_default_str();
  mc->add_option("--samples", s.samples, "Number of samples (default 100000)");
  mc->add_option("--seed", s.config.seed, "Random seed")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the formula verification suite");
  verify->add_option("--samples", s.samples, "Monte Carlo samples per estimate (default 1000000)");
  verify->add_option("--seed", s.config.seed, "Random seed")->capture_default_str();
  verify->add_option("--check", s.checks, "Run only these check numbers")->check(CLI::Range(1, 12));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wordlab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    s.config.format = parse_output_format(s.format);
    s.config.validate();
    EnumerationOptions opt = s.config.enumeration();

    if (*measure) {
      auto g = require_group(s);
      Word w = parse_word(w1, resolve_rank(s, {w1}));
      Json j = to_json(word_measure(g, w, opt));
      j["word"] = to_string(w);
      emit(j, s, out);
    } else if (*tau_cmd) {
      auto g = require_group(s);
      Word w = parse_word(w1, resolve_rank(s, {w1}));
      auto reps = select_reps(g, s.rep);
      auto mu = word_measure(g, w, opt);
      if (reps.size() == 1) {
        emit(Json{{"tau", tau_value_json(tau(mu, reps[0]))}}, s, out);
      } else {
        Json list = Json::array();
        for (const auto& r : reps) list.push_back({{"rep", r.label}, {"dim", r.dim}, {"tau", tau_value_json(tau(mu, r))}});
        emit(Json{{"group", g->name()}, {"word", to_string(w)}, {"taus", std::move(list)}}, s, out);
      }
    } else if (*fs) {
      auto g = require_group(s);
      Json list = Json::array();
      for (const auto& r : select_reps(g, s.rep)) {
        list.push_back({{"rep", r.label}, {"dim", r.dim}, {"fs", fs_indicator(r)}});
      }
      emit(Json{{"group", g->name()}, {"indicators", std::move(list)}}, s, out);
    } else if (*table) {
      auto g = require_group(s);
      emit(character_table_json(g, builtin_irreps(g)), s, out);
    } else if (*dist) {
      int r = resolve_rank(s, {w1, w2});
      auto res = distinguish(parse_word(w1, r), parse_word(w2, r), s.max_order, opt, s.config.order_cap);
      Json j{{"witness", res.witness ? Json(*res.witness) : Json(nullptr)},
             {"checked", res.checked},
             {"skipped", res.skipped}};
      emit(j, s, out);
    } else if (*prim) {
      Word w = parse_word(w1, resolve_rank(s, {w1}));
      emit(Json{{"primitive", is_primitive(w)}}, s, out);
    } else if (*orbit) {
      int r = resolve_rank(s, {w1, w2});
      auto d = same_orbit(parse_word(w1, r), parse_word(w2, r));
      Json j{{"same_orbit", d.same_orbit}};
      if (s.exact) {
        if (d.automorphism) {
          j["automorphism"] = to_json(*d.automorphism);
        } else {
          j["automorphism"] = nullptr;
        }
        Json trace = Json::array();
        for (const auto& a : d.trace) trace.push_back(a.to_string());
        j["whitehead_trace"] = std::move(trace);
      }
      emit(j, s, out);
    } else if (*orbits) {
      auto g = require_group(s);
      emit(to_json(orbit_decomposition(g, s.rank.value_or(2), s.config.tuple_budget)), s, out);
    } else if (*zorbit) {
      auto x = parse_abelian_word(w1), y = parse_abelian_word(w2);
      auto m = find_distinguishing_modulus(x, y);
      emit(Json{{"same_orbit", same_gl_orbit(x, y)}, {"witness_modulus", m ? Json(*m) : Json(nullptr)}}, s, out);
    } else if (*zmeasure) {
      auto x = parse_abelian_word(w1);
      emit(Json{{"gcd", gl_orbit_invariant(x)}, {"modulus", s.modulus}, {"weights", to_json(abelian_word_measure(x, s.modulus))}},
           s, out);
    } else if (*mc) {
      Word w = parse_word(w1, resolve_rank(s, {w1}));
      auto est = mc_tau(parse_matrix_family(s.family), s.dimension, w, s.samples.value_or(s.config.samples),
                        s.config.seed, s.config.workers);
      emit(to_json(est), s, out);
    } else if (*verify) {
      VerifyOptions vo;
      vo.mc_samples = s.samples.value_or(vo.mc_samples);
      vo.seed = s.config.seed;
      vo.workers = s.config.workers;
      std::vector<CheckResult> results;
      if (s.checks.empty()) {
        results = run_all_checks(vo);
      } else {
        for (int id : s.checks) results.push_back(run_check(id, vo));
      }
      if (s.config.format == OutputFormat::table) {
        print_verify_table(results, out);
      } else {
        print_verify_table(results, err);
        out << verify_json(results).dump() << '\n';
      }
      bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return all ? kOk : kFailure;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "wordlab: " << e.what() << "\n";
    return kUsage;
  } catch (const RankError& e) {
    err << "wordlab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "wordlab: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace wordlab::cli
