#pragma once

// Elementary Nielsen moves and endomorphisms of F_r given by generator images.

#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/words.hpp"

namespace wordlab {

// alpha_sigma: x_i -> x_{sigma(i)}; sigma is stored 0-based.
struct Permute {
  std::vector<int> sigma;
  friend bool operator==(const Permute&, const Permute&) = default;
};
// iota: x_1 -> x_1^-1.
struct InvertFirst {
  friend bool operator==(const InvertFirst&, const InvertFirst&) = default;
};
// gamma: x_1 -> x_1 x_2.
struct MultiplyFirst {
  friend bool operator==(const MultiplyFirst&, const MultiplyFirst&) = default;
};

class NielsenMove {
 public:
  using Variant = std::variant<Permute, InvertFirst, MultiplyFirst>;

  NielsenMove(int rank, Variant v) : rank_(rank), move_(std::move(v)) {
    if (rank < 1) throw RankError("rank must be positive");
    if (auto* p = std::get_if<Permute>(&move_)) {
      if (p->sigma.size() != static_cast<std::size_t>(rank)) {
        throw RankError("permutation length differs from rank");
      }
      std::vector<bool> seen(p->sigma.size(), false);
      for (int s : p->sigma) {
        if (s < 0 || s >= rank || seen[static_cast<std::size_t>(s)]) {
          throw Error("Nielsen permutation is not a bijection of 1..r");
        }
        seen[static_cast<std::size_t>(s)] = true;
      }
    }
    if (std::holds_alternative<MultiplyFirst>(move_) && rank < 2) {
      throw RankError("MultiplyFirst needs rank >= 2");
    }
  }

  static NielsenMove permute(std::vector<int> sigma) {
    int r = static_cast<int>(sigma.size());
    return NielsenMove(r, Permute{std::move(sigma)});
  }
  static NielsenMove swap(int rank, int i = 0, int j = 1) {
    std::vector<int> s(static_cast<std::size_t>(rank));
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
    return NielsenMove(rank, Permute{std::move(s)});
  }
  static NielsenMove invert_first(int rank) { return NielsenMove(rank, InvertFirst{}); }
  static NielsenMove multiply_first(int rank) { return NielsenMove(rank, MultiplyFirst{}); }

  int rank() const noexcept { return rank_; }
  const Variant& move() const noexcept { return move_; }

  std::string name() const {
    if (auto* p = std::get_if<Permute>(&move_)) {
      std::string s = "permute(";
      for (std::size_t i = 0; i < p->sigma.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p->sigma[i] + 1);
      }
      return s + ")";
    }
    return std::holds_alternative<InvertFirst>(move_) ? "invert_first" : "multiply_first";
  }

 private:
  int rank_;
  Variant move_;
};

// The elementary moves at rank r, with Permute as the transposition (1 2).
// At rank 1 only InvertFirst applies.
inline std::vector<NielsenMove> elementary_moves(int rank) {
  std::vector<NielsenMove> out;
  if (rank >= 2) {
    out.push_back(NielsenMove::swap(rank));
    out.push_back(NielsenMove::multiply_first(rank));
  }
  out.push_back(NielsenMove::invert_first(rank));
  return out;
}

template <typename Rng>
NielsenMove random_elementary_move(int rank, Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (rank >= 2 ? kind(rng) : 1) {
    case 0: {
      std::vector<int> s(static_cast<std::size_t>(rank));
      std::iota(s.begin(), s.end(), 0);
      std::shuffle(s.begin(), s.end(), rng);
      return NielsenMove::permute(std::move(s));
    }
    case 1: return NielsenMove::invert_first(rank);
    default: return NielsenMove::multiply_first(rank);
  }
}

// Endomorphism of F_r determined by the images of x_1..x_r.
class Endomorphism {
 public:
  explicit Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw RankError("endomorphism needs at least one image");
    rank_ = images_.front().rank();
    if (static_cast<std::size_t>(rank_) != images_.size()) {
      throw RankError("endomorphism: number of images differs from rank");
    }
    for (const auto& w : images_) {
      if (w.rank() != rank_) throw RankError("endomorphism: image rank mismatch");
    }
  }

  static Endomorphism identity(int rank) {
    std::vector<Word> im;
    for (int i = 1; i <= rank; ++i) im.push_back(Word::generator(rank, i));
    return Endomorphism(std::move(im));
  }

  static Endomorphism from_move(const NielsenMove& m) {
    int r = m.rank();
    Endomorphism f = identity(r);
    if (auto* p = std::get_if<Permute>(&m.move())) {
      for (int i = 0; i < r; ++i) {
        f.images_[static_cast<std::size_t>(i)] = Word::generator(r, p->sigma[static_cast<std::size_t>(i)] + 1);
      }
    } else if (std::holds_alternative<InvertFirst>(m.move())) {
      f.images_[0] = Word::generator(r, 1, -1);
    } else {
      f.images_[0] = Word::from_codes(r, {1, 2});
    }
    return f;
  }

  // Two-sided inverse of an elementary move.
  static Endomorphism inverse_of_move(const NielsenMove& m) {
    int r = m.rank();
    Endomorphism f = identity(r);
    if (auto* p = std::get_if<Permute>(&m.move())) {
      for (int i = 0; i < r; ++i) {
        f.images_[static_cast<std::size_t>(p->sigma[static_cast<std::size_t>(i)])] = Word::generator(r, i + 1);
      }
    } else if (std::holds_alternative<InvertFirst>(m.move())) {
      f.images_[0] = Word::generator(r, 1, -1);
    } else {
      f.images_[0] = Word::from_codes(r, {1, -2});
    }
    return f;
  }

  // Inner automorphism x -> u x u^-1.
  static Endomorphism inner(const Word& u) {
    int r = u.rank();
    std::vector<Word> im;
    Word ui = invert(u);
    for (int i = 1; i <= r; ++i) im.push_back(multiply(multiply(u, Word::generator(r, i)), ui));
    return Endomorphism(std::move(im));
  }

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }

  Word operator()(const Word& w) const {
    if (w.rank() != rank_) throw RankError("endomorphism rank differs from word rank");
    Word out(rank_);
    for (Letter l : w.letters()) {
      const Word& im = images_[static_cast<std::size_t>(l.generator() - 1)];
      if (l.sign() > 0) {
        for (Letter a : im.letters()) out.push_back(a);
      } else {
        for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) out.push_back(it->inverse());
      }
    }
    return out;
  }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

inline Word apply_endomorphism(const Endomorphism& f, const Word& w) { return f(w); }

inline Word apply_nielsen(const NielsenMove& m, const Word& w) {
  if (m.rank() != w.rank()) throw RankError("Nielsen move rank differs from word rank");
  return Endomorphism::from_move(m)(w);
}

// (f o g)(x_i) = f(g(x_i)).
inline Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) throw RankError("compose: rank mismatch");
  std::vector<Word> im;
  im.reserve(g.images().size());
  for (const auto& w : g.images()) im.push_back(f(w));
  return Endomorphism(std::move(im));
}

inline std::vector<std::string> to_strings(const Endomorphism& f) {
  std::vector<std::string> out;
  for (const auto& w : f.images()) out.push_back(to_string(w));
  return out;
}

}  // namespace wordlab
