#pragma once

// t-spread monomials and the principal Borel ideal B_t(u).

#include <span>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// The triple (n, t, u) with u = x_{i_1}...x_{i_d} t-spread; defines B_t(u).
class BorelInstance {
 public:
  /// Throws InvalidInput if t < 1, u is empty, u is not t-spread, or i_d > n.
  BorelInstance(int n, int t, IndexSet u);

  int n() const { return n_; }
  int t() const { return t_; }
  int degree() const { return static_cast<int>(u_.size()); }
  const IndexSet& u() const { return u_; }
  /// i_k, 1-based.
  int i(int k) const { return u_[static_cast<std::size_t>(k - 1)]; }
  Monomial u_monomial() const { return Monomial::from_set(static_cast<std::size_t>(n_), u_); }

  /// The same generator in n' = i_d variables.
  BorelInstance restricted() const { return BorelInstance(u_.back(), t_, u_); }

  /// u = x_{n-(d-1)t} ... x_{n-t} x_n: generated by all t-spread monomials of degree d.
  bool is_veronese() const;

  std::string to_string() const;  // "B_2(x2*x4*x9) in 9 variables"

  friend bool operator==(const BorelInstance&, const BorelInstance&) = default;

 private:
  int n_;
  int t_;
  IndexSet u_;
};

bool is_tspread(const Monomial& m, int t);

/// G(B_t(u)): all x_{j_1}...x_{j_d} with j_k <= i_k and j_k - j_{k-1} >= t,
/// in decreasing pure lex order.
std::vector<Monomial> generators(const BorelInstance& inst);

/// Ideal membership in B_t(u).
bool contains(const BorelInstance& inst, const Monomial& m);

/// Fixpoint of the exchange moves x_i (v / x_j), i < j, starting from {u}.
/// Independent of generators(); returned in decreasing pure lex order.
std::vector<Monomial> closure_oracle(const BorelInstance& inst);

/// Closed under every exchange move whose result is t-spread, where closure
/// means membership in the ideal generated by `set`.
bool is_tspread_strongly_stable(std::span<const Monomial> set, int t);

/// Every index of [n] divides some generator.
bool support_covers_ambient(const BorelInstance& inst);

}  // namespace tspread
