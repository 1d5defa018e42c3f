#pragma once

// Brute-force engines used to cross-check the closed-form results: monomial
// ideal arithmetic, irreducible decomposition, exhaustive face scans, and
// marked-binomial reduction.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tspread/guards.hpp"
#include "tspread/monomial.hpp"
#include "tspread/toric.hpp"

namespace tspread::oracle {

/// Minimal generators of the ideal, sorted decreasingly in pure lex.
std::vector<Monomial> minimize(std::span<const Monomial> gens);
bool ideal_contains(std::span<const Monomial> gens, const Monomial& m);
/// Equality of the ideals, by mutual divisibility of the generating sets.
bool ideal_equal(std::span<const Monomial> a, std::span<const Monomial> b);
std::vector<Monomial> intersect(std::span<const Monomial> a, std::span<const Monomial> b);
/// Minimal generators of (I : m).
std::vector<Monomial> colon_ideal(std::span<const Monomial> gens, const Monomial& m);

/// (x_i^{a_i} : i in support) stored as the exponent vector a.
class IrreducibleComponent {
 public:
  explicit IrreducibleComponent(Monomial powers) : powers_(std::move(powers)) {}
  const Monomial& powers() const { return powers_; }
  IndexSet radical() const { return powers_.support(); }
  std::vector<Monomial> generators() const;
  /// This ideal contains `other`.
  bool contains(const IrreducibleComponent& other) const;
  std::string to_string() const;  // "(x1^2, x3)"

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent&, const IrreducibleComponent&) = default;

 private:
  Monomial powers_;
};

/// Irredundant irreducible decomposition, built one generator at a time from
/// Q + (g) = meet of Q + (x_i^{g_i}) over supp(g), pruned after every step.
/// Empty for the unit ideal. Guarded by ambient size and component count.
std::vector<IrreducibleComponent> irreducible_decomposition(std::span<const Monomial> gens, std::size_t n,
                                                            const Guards& guards = {});

/// Facets of the Stanley-Reisner complex of a squarefree ideal: maximal
/// subsets F of [n] with x_F outside the ideal. Exhaustive over 2^n subsets.
std::vector<IndexSet> maximal_nonfaces(std::span<const Monomial> gens, std::size_t n, const Guards& guards = {});

struct ReductionResult {
  PresPolynomial remainder;
  bool conclusive = true;
  std::size_t steps = 0;
};

/// Marked reduction by a list of binomials. A term divisible by several marked
/// initials is reduced by the earliest one in list order.
class MarkedReducer {
 public:
  explicit MarkedReducer(std::span<const ToricBinomial> gb);

  /// Index of the first binomial whose initial divides `m`.
  std::optional<std::size_t> find_reducer(const ReesMonomial& m) const;
  /// Reduces until no term is divisible by an initial. A step count above
  /// `step_bound` (default 4 * max term degree * |gb|) gives conclusive = false.
  ReductionResult reduce(PresPolynomial poly, std::optional<std::size_t> step_bound = std::nullopt) const;

  std::size_t size() const { return gb_.size(); }

 private:
  std::vector<ToricBinomial> gb_;
  std::size_t n_ = 0;
  // Binomials bucketed by the first variable of their initial term.
  std::vector<std::vector<std::size_t>> buckets_;
};

ReductionResult marked_reduce(const PresPolynomial& poly, std::span<const ToricBinomial> gb);

}  // namespace tspread::oracle
