#pragma once

#include <stdexcept>
#include <string>

namespace tspread {

/// Malformed input: bad monomial text, ambient mismatch, illegal instance.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition of a theorem-backed construction does not hold.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size guard refused the computation.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A claim the library certifies turned out false. Always a bug or a
/// counterexample; never swallowed.
class ClaimViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tspread
