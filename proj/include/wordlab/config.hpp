#pragma once

#include <cstdint>
#include <string>

#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"
#include "wordlab/tuple_orbits.hpp"
#include "wordlab/word_measures.hpp"

namespace wordlab {

enum class OutputFormat { json, table };

inline constexpr std::uint64_t kDefaultMonteCarloSamples = 100'000;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RunConfig {
  std::uint64_t budget = kDefaultEnumerationBudget;    // word evaluations
  std::uint64_t tuple_budget = kDefaultTupleBudget;    // tuples in G^r
  std::size_t order_cap = kDefaultOrderCap;            // largest group built
  std::uint64_t samples = kDefaultMonteCarloSamples;   // Monte Carlo
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;                                // 0: WORDLAB_WORKERS or hardware
  OutputFormat format = OutputFormat::json;

  void validate() const {
    if (budget == 0 || tuple_budget == 0 || order_cap == 0) throw Error("budgets must be positive");
    if (samples == 0) throw Error("sample count must be positive");
  }

  EnumerationOptions enumeration() const {
    EnumerationOptions opt;
    opt.budget = budget;
    opt.workers = workers;
    return opt;
  }
};

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "table") return OutputFormat::table;
  throw ParseError("unknown output format '" + s + "' (expected json or table)");
}

}  // namespace wordlab
