#pragma once

// Monomials and marked binomials in R = S[t_v : v in G(I)].

#include <map>
#include <string>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// A variable of the presentation ring: x_i, or t_v for the generator at
/// 1-based position `index` of the generator list.
struct PresVar {
  enum class Kind { X, T };
  Kind kind;
  int index;

  friend bool operator==(const PresVar&, const PresVar&) = default;
  friend auto operator<=>(const PresVar&, const PresVar&) = default;
};

/// x^a t^b: `x` over the n ring variables, `t` over the m generator variables.
struct ReesMonomial {
  Monomial x;
  Monomial t;

  unsigned x_degree() const { return x.degree(); }
  unsigned t_degree() const { return t.degree(); }
  unsigned degree() const { return x.degree() + t.degree(); }
  bool is_squarefree() const { return x.is_squarefree() && t.is_squarefree(); }
  bool is_one() const { return x.is_one() && t.is_one(); }
  /// Variables with multiplicity, x-variables first.
  std::vector<PresVar> variables() const;

  friend bool operator==(const ReesMonomial&, const ReesMonomial&) = default;
  friend auto operator<=>(const ReesMonomial&, const ReesMonomial&) = default;
};

ReesMonomial product(const ReesMonomial& a, const ReesMonomial& b);
bool divides(const ReesMonomial& a, const ReesMonomial& b);
ReesMonomial quotient(const ReesMonomial& a, const ReesMonomial& b);
ReesMonomial lcm(const ReesMonomial& a, const ReesMonomial& b);
bool coprime(const ReesMonomial& a, const ReesMonomial& b);

enum class BinomialFamily { Sorting, X, Other };
std::string to_string(BinomialFamily family);
BinomialFamily binomial_family_from_string(const std::string& name);

/// lhs - rhs with lhs the designated initial term.
struct ToricBinomial {
  ReesMonomial lhs;
  ReesMonomial rhs;
  BinomialFamily family = BinomialFamily::Other;

  friend bool operator==(const ToricBinomial&, const ToricBinomial&) = default;
};

/// Integer combination of presentation monomials.
using PresPolynomial = std::map<ReesMonomial, long long>;

}  // namespace tspread
