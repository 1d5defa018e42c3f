#pragma once

// Powers I^k: generators, lex linear quotients, projective dimension and
// depth, the limit-depth witness, and associated primes.

#include <optional>
#include <span>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/dual.hpp"
#include "tspread/guards.hpp"

namespace tspread {

/// G(I^k) in decreasing pure lex, one product per sorted k-tuple of
/// generators. Throws GuardExceeded past guards.max_power_generators.
std::vector<Monomial> power_generators(const BorelInstance& inst, int k, const Guards& guards = {});

/// Linear-quotient profiles of G(I^k) in decreasing lex order. Throws
/// ClaimViolation if some colon is not generated by variables.
std::vector<QuotientProfile> lex_quotient_profiles(const BorelInstance& inst, int k, const Guards& guards = {});

struct DepthReport {
  int n = 0;
  int k = 0;
  int projdim = 0;
  int depth = 0;
  /// Lex-earliest generator with the largest r_j.
  std::optional<Monomial> witness;

  friend bool operator==(const DepthReport&, const DepthReport&) = default;
};

/// projdim S/I^k = max r_j + 1 and depth = n - projdim.
DepthReport depth_report(const BorelInstance& inst, int k, const Guards& guards = {});

/// S/I is Cohen-Macaulay: depth S/I = dim S/I.
bool is_cohen_macaulay(const BorelInstance& inst, const Guards& guards = {});

struct WitnessStep {
  int j = 0;
  int s = 0;
  Monomial replaced;     // v_{d-s+1}
  Monomial replacement;  // x_j v_{d-s+1} / x_{i_s}
  Monomial w_prime;
  bool replacement_is_generator = false;
  bool lex_greater = false;
  bool identity_holds = false;  // x_j w = x_{i_s} w'
  bool ok() const { return replacement_is_generator && lex_greater && identity_holds; }

  friend bool operator==(const WitnessStep&, const WitnessStep&) = default;
};

struct LimdepthWitness {
  std::vector<Monomial> chain;  // v_1, ..., v_d
  Monomial w;                   // v_1 ... v_d u^{k-d}
  std::vector<WitnessStep> steps;
  /// Variables generating (w' in G(I^k) : w' >lex w) : w, found by scanning
  /// G(I^k) directly rather than through the replacement construction.
  IndexSet colon_variables;
  bool verified() const;

  friend bool operator==(const LimdepthWitness&, const LimdepthWitness&) = default;
};

/// Builds the witness monomial whose lex colon ideal is generated by
/// x_1, ..., x_{n-1}. Requires i_1 >= t+1, i_d = n and k >= d.
LimdepthWitness limdepth_witness(const BorelInstance& inst, int k, const Guards& guards = {});

/// For the Veronese ideal u = x_t x_{2t} ... x_{dt} in n = dt variables: no
/// variable of supp(u) occurs in any linear-quotient profile of I^k.
bool veronese_support_obstruction(const BorelInstance& inst, int k, const Guards& guards = {});

/// Ass(S/I) from the irredundant irreducible decomposition.
std::vector<IndexSet> associated_primes(std::span<const Monomial> gens, std::size_t n, const Guards& guards = {});

/// A monomial m with (I : m) = P_P, searched over exponents bounded by the
/// componentwise maximum of the generators.
std::optional<Monomial> ass_witness_oracle(std::span<const Monomial> gens, std::size_t n, const IndexSet& prime,
                                           const Guards& guards = {});

struct PersistenceResult {
  bool ok = true;
  /// Smallest k with Ass(I^k) not inside Ass(I^{k+1}); 0 when ok.
  int violating_k = 0;
  /// ass[k-1] = Ass(I^k).
  std::vector<std::vector<IndexSet>> ass;

  friend bool operator==(const PersistenceResult&, const PersistenceResult&) = default;
};

PersistenceResult persistence_check(const BorelInstance& inst, int kmax, const Guards& guards = {});

}  // namespace tspread
