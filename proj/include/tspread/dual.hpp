#pragma once

// Stanley-Reisner facets of B_t(u), the Alexander dual generators, and the
// generator ordering under which the dual has linear quotients.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

/// The three facet families. F1: d-1 width-t intervals. F2: {i_1+1..n}.
/// F3: s-1 width-t intervals followed by the tail [i_s+1, n].
enum class FacetForm { F1, F2, F3 };

std::string to_string(FacetForm form);
FacetForm facet_form_from_string(const std::string& name);

struct Facet {
  FacetForm form;
  /// Interval starts j_1, j_2, ...; empty for F2.
  std::vector<int> starts;
  /// The tail index s for F3, 0 otherwise.
  int s = 0;
  IndexSet members;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// v_j = x_j x_{j+1} ... x_{j+t-1}.
Monomial interval_monomial(int n, int start, int t);

/// All facets of the complex whose Stanley-Reisner ideal is B_t(u), from the
/// closed-form families. When i_d < n the facets are computed in i_d variables
/// and every facet is coned over {i_d+1..n}. Duplicate member sets (d = 1) are
/// kept once, with the earliest of F2, F3, F1.
std::vector<Facet> facets(const BorelInstance& inst);

struct DualGenerator {
  Monomial monomial;
  FacetForm form;

  friend bool operator==(const DualGenerator&, const DualGenerator&) = default;
};

/// prod_{k not in F} x_k for each facet F, in facet order.
std::vector<DualGenerator> dual_generators(const BorelInstance& inst);

/// w_1 = x_1...x_{i_1} first, then the F3 block, then the F1 block, each block
/// in decreasing pure lex. Throws HypothesisViolation if `duals` has no
/// F2 generator equal to x_1...x_{i_1}.
std::vector<DualGenerator> scm_order(std::span<const DualGenerator> duals, const BorelInstance& inst);

/// One step of a linear-quotients run: (w_1, ..., w_{j-1}) : w_j.
struct QuotientProfile {
  Monomial generator;
  /// Variables x_l with x_l w_j in (w_1, ..., w_{j-1}).
  IndexSet variables;

  std::size_t r() const { return variables.size(); }
  friend bool operator==(const QuotientProfile&, const QuotientProfile&) = default;
};

struct LinearQuotientsResult {
  bool ok = true;
  /// One profile per generator examined; on failure, up to and excluding the
  /// failing position.
  std::vector<QuotientProfile> profiles;
  /// 1-based positions j (failing generator) and g < j (offending earlier one).
  std::size_t failed_index = 0;
  std::size_t offending_index = 0;

  friend bool operator==(const LinearQuotientsResult&, const LinearQuotientsResult&) = default;
};

/// Checks that every colon (w_1..w_{j-1}) : w_j is generated by variables.
/// Throws InvalidInput on repeated monomials or mixed ambients.
LinearQuotientsResult linear_quotients_check(std::span<const Monomial> ordered);

/// Variable sets of the minimal primes: the complements of the facets, sorted.
std::vector<IndexSet> minimal_primes(const BorelInstance& inst);

/// dim S/I = size of the largest facet.
int krull_dimension(const BorelInstance& inst);

}  // namespace tspread
