#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordlab {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word, group spec, vector or file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : Error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands of different rank, or a generator index outside the rank.
class RankError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Two objects that must refer to the same group do not.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

// Operation not available for this group or representation.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A numerical or algebraic consistency check failed; indicates bad input data
// (a reducible representation, inconsistent character values, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wordlab
