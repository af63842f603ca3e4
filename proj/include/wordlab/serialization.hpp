#pragma once

// JSON encodings of results, character tables and imported groups.

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "wordlab/abelian_toy.hpp"
#include "wordlab/automorphisms.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/cyclotomic.hpp"
#include "wordlab/error.hpp"
#include "wordlab/finite_group.hpp"
#include "wordlab/haar_mc.hpp"
#include "wordlab/rational.hpp"
#include "wordlab/representations.hpp"
#include "wordlab/tuple_orbits.hpp"
#include "wordlab/word_measures.hpp"

namespace wordlab {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string cycle_notation(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      out += (out.back() == '(' ? "" : " ") + std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline std::string factor_element_label(const FactorModel& m, std::size_t e) {
  switch (m.kind) {
    case FactorModel::Kind::cyclic: return std::to_string(e);
    case FactorModel::Kind::dihedral: {
      auto [j, f] = m.dihedral[e];
      std::string s = j == 0 ? (f ? "" : "e") : (j == 1 ? "r" : "r^" + std::to_string(j));
      if (f) s += s.empty() ? "f" : " f";
      return s;
    }
    case FactorModel::Kind::symmetric:
    case FactorModel::Kind::alternating: return cycle_notation(m.permutations[e]);
    case FactorModel::Kind::quaternion: {
      static constexpr const char* kUnits[] = {"1", "i", "j", "k"};
      int label = m.quaternion[e];
      return std::string(label % 2 ? "-" : "") + kUnits[label / 2];
    }
  }
  return std::to_string(e);
}

}  // namespace detail

// Readable name of an element: cycle notation for permutations, r^j f for
// dihedral, residues for cyclic, quaternion units; tuples for products.
inline std::string element_label(const FiniteGroup& g, Element e) {
  const auto& fs = g.factors();
  if (fs.empty()) return std::to_string(e);
  if (fs.size() == 1) return detail::factor_element_label(*fs[0], e);
  std::string s = "<";
  for (std::size_t f = 0; f < fs.size(); ++f) {
    s += (f ? ", " : "") + detail::factor_element_label(*fs[f], g.component(e, f));
  }
  return s + ">";
}

inline Json to_json(const ClassDistribution& d) {
  const FiniteGroup& g = *d.group();
  Json classes = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Element rep = g.class_representative(c);
    classes.push_back({{"rep", rep}, {"label", element_label(g, rep)}, {"size", g.class_size(c)},
                       {"weight", to_string(d.weight(c))}});
  }
  return Json{{"group", g.name()}, {"classes", std::move(classes)}};
}

// {"re":"p/q","im":"p/q"} when the value lies in Q(i), otherwise the
// coefficient vector over powers of a primitive root of unity.
inline Json to_json(const Cyclotomic& z) {
  Rational re, im;
  if (z.gaussian_parts(re, im)) return Json{{"re", to_string(re)}, {"im", to_string(im)}};
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"cyclotomic", {{"order", z.order()}, {"coefficients", std::move(coeffs)}}}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.contains("cyclotomic")) {
    const auto& c = j.at("cyclotomic");
    int m = c.at("order").get<int>();
    Cyclotomic out(0);
    int k = 0;
    for (const auto& v : c.at("coefficients")) {
      out += Cyclotomic(parse_rational(v.get<std::string>())) * Cyclotomic::root_of_unity(m, k++);
    }
    return out;
  }
  return Cyclotomic::gaussian(parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>()));
}

inline Json character_table_json(const GroupPtr& group, const std::vector<Representation>& irreps) {
  const FiniteGroup& g = *group;
  Json classes = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    Element rep = g.class_representative(c);
    classes.push_back({{"rep", rep}, {"label", element_label(g, rep)}, {"size", g.class_size(c)}});
  }
  Json chars = Json::array();
  for (const auto& r : irreps) {
    Json values = Json::array();
    for (const auto& v : r.character) values.push_back(to_json(v));
    chars.push_back({{"label", r.label}, {"dim", r.dim}, {"values", std::move(values)}});
  }
  return Json{{"group", g.name()}, {"classes", std::move(classes)}, {"characters", std::move(chars)}};
}

inline Json to_json(const OrbitReport& r) {
  Json sizes = Json::array(), reps = Json::array(), gen = Json::array();
  for (const auto& o : r.orbits) {
    sizes.push_back(o.size);
    reps.push_back(o.representative);
    gen.push_back(o.generating);
  }
  return Json{{"group", r.group},
              {"rank", r.rank},
              {"total_tuples", r.total_tuples},
              {"orbit_count", r.orbit_count()},
              {"orbit_sizes", std::move(sizes)},
              {"orbit_representatives", std::move(reps)},
              {"orbit_generating", std::move(gen)},
              {"epi_orbit_count", r.epi_orbit_count},
              {"epi_tuple_count", r.epi_tuple_count},
              {"transitive_on_epi", r.transitive_on_epi()}};
}

inline Json to_json(const MCEstimate& e) {
  return Json{{"target", e.target()},
              {"family", to_string(e.family)},
              {"n", e.dimension},
              {"word", e.word},
              {"mean", {{"re", e.mean.real()}, {"im", e.mean.imag()}}},
              {"stderr", e.standard_error},
              {"samples", e.samples},
              {"seed", e.seed}};
}

inline Json to_json(const Endomorphism& f) {
  Json images = Json::array();
  for (const auto& s : to_strings(f)) images.push_back(s);
  return images;
}

inline Json to_json(const std::vector<Rational>& weights) {
  Json out = Json::array();
  for (const auto& w : weights) out.push_back(to_string(w));
  return out;
}

// Imported group: {"name": optional, "order": n, "mult": n*n row-major
// indices with element 0 the identity}.
inline GroupPtr group_from_json(const Json& j) {
  auto order = j.at("order").get<std::size_t>();
  if (order == 0 || order > kMaxGroupOrder) throw Error("imported group order out of range");
  const auto& rows = j.at("mult");
  std::vector<Element> mult;
  mult.reserve(order * order);
  auto push = [&](const Json& v) {
    auto x = v.get<long long>();
    if (x < 0 || static_cast<std::size_t>(x) >= order) throw Error("multiplication table entry out of range");
    mult.push_back(static_cast<Element>(x));
  };
  for (const auto& row : rows) {
    if (row.is_array()) {
      for (const auto& v : row) push(v);
    } else {
      push(row);
    }
  }
  std::string name = j.value("name", std::string("imported"));
  return std::make_shared<const FiniteGroup>(name, order, std::move(mult));
}

inline GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
  return group_from_json(j);
}

// A catalog spec, or a path to a JSON group file.
inline GroupPtr resolve_group(const std::string& spec, std::size_t order_cap = kDefaultOrderCap) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_group_file(spec);
  return make_group(spec, order_cap);
}

}  // namespace wordlab
