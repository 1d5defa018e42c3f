#pragma once

// The sorting operator on equal-degree monomials.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

/// Merge the indices of v*w as i_1 <= ... <= i_{2d}; v' takes the odd
/// positions and w' the even ones. Throws InvalidInput on degree mismatch.
std::pair<Monomial, Monomial> sort_pair(const Monomial& v, const Monomial& w);

bool is_sorted_pair(const Monomial& v, const Monomial& w);

/// Every pair (u_i, u_j), i < j, is fixed by sort_pair.
bool is_sorted_tuple(std::span<const Monomial> tuple);

/// A tuple of equal-degree monomials satisfying the sorted chain condition.
class SortedTuple {
 public:
  const std::vector<Monomial>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }
  unsigned degree() const { return factors_.empty() ? 0 : factors_.front().degree(); }
  Monomial product() const;

  friend bool operator==(const SortedTuple&, const SortedTuple&) = default;

 private:
  friend SortedTuple sort_tuple(std::span<const Monomial> tuple);
  std::vector<Monomial> factors_;
};

/// The unique sorted tuple with the same product, reached by sweeping
/// sort_pair over all pairs until nothing changes. At most r*d*n sweeps;
/// exceeding that throws ClaimViolation.
SortedTuple sort_tuple(std::span<const Monomial> tuple);

struct SortabilityResult {
  bool ok = true;
  /// The offending input pair and its sorting, when !ok.
  std::optional<std::pair<Monomial, Monomial>> pair;
  std::optional<std::pair<Monomial, Monomial>> sorted;

  friend bool operator==(const SortabilityResult&, const SortabilityResult&) = default;
};

/// sort(B x B) is contained in B x B.
SortabilityResult sortable_check(std::span<const Monomial> gens);

}  // namespace tspread
