#pragma once

// Report records emitted by the command-line tool, with JSON
// serialization. Every report carries enough context (the instance or the
// ambient n) to parse its monomials back, so from_json(to_json(r)) == r.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tspread/borel.hpp"
#include "tspread/dual.hpp"
#include "tspread/oracle.hpp"
#include "tspread/powers.hpp"
#include "tspread/rees.hpp"

namespace tspread {

using json = nlohmann::json;

struct GeneratorsReport {
  BorelInstance instance;
  std::vector<Monomial> generators;
  friend bool operator==(const GeneratorsReport&, const GeneratorsReport&) = default;
};

struct DualReport {
  BorelInstance instance;
  bool support_covers_ambient = true;
  /// In the linear-quotients order.
  std::vector<DualGenerator> generators;
  friend bool operator==(const DualReport&, const DualReport&) = default;
};

struct FacetsReport {
  BorelInstance instance;
  std::vector<Facet> facets;
  friend bool operator==(const FacetsReport&, const FacetsReport&) = default;
};

struct ScmReport {
  BorelInstance instance;
  std::vector<DualGenerator> order;
  LinearQuotientsResult quotients;
  friend bool operator==(const ScmReport&, const ScmReport&) = default;
};

struct SortReport {
  std::size_t n = 0;
  std::vector<Monomial> input;
  std::vector<Monomial> sorted;
  bool input_sorted = false;
  friend bool operator==(const SortReport&, const SortReport&) = default;
};

struct ReesGbReport {
  BorelInstance instance;
  std::vector<ToricBinomial> binomials;
  bool kernel_ok = true;
  bool x_condition = true;
  ReducednessReport reducedness;
  /// "verified" / "failed" / "inconclusive" when verification was requested.
  std::optional<std::string> buchberger;
  friend bool operator==(const ReesGbReport&, const ReesGbReport&) = default;
};

struct ExchangeReport {
  BorelInstance instance;
  std::size_t degree = 0;
  ExchangeResult result;
  friend bool operator==(const ExchangeReport&, const ExchangeReport&) = default;
};

struct LexWitnessCliReport {
  BorelInstance instance;
  std::vector<Monomial> cubic;
  /// The other side of the cubic binomial, when one was supplied.
  std::vector<Monomial> partner;
  std::optional<bool> binomial_in_kernel;
  std::optional<bool> cubic_is_lex_initial;
  bool cubic_sorted = false;
  LexWitnessReport witness;
  friend bool operator==(const LexWitnessCliReport&, const LexWitnessCliReport&) = default;
};

struct FiberDimReport {
  BorelInstance instance;
  int dimension = 0;
  friend bool operator==(const FiberDimReport&, const FiberDimReport&) = default;
};

struct LimdepthReport {
  BorelInstance instance;
  int k = 0;
  LimdepthWitness witness;
  friend bool operator==(const LimdepthReport&, const LimdepthReport&) = default;
};

struct AssReport {
  BorelInstance instance;
  int k = 0;
  std::vector<IndexSet> primes;
  /// Second oracle: a monomial m with (I^k : m) = P for each prime P.
  std::vector<std::optional<Monomial>> witnesses;
  friend bool operator==(const AssReport&, const AssReport&) = default;
};

struct PersistenceReport {
  BorelInstance instance;
  int kmax = 0;
  PersistenceResult result;
  friend bool operator==(const PersistenceReport&, const PersistenceReport&) = default;
};

struct DecomposeReport {
  std::size_t n = 0;
  std::vector<Monomial> generators;
  std::vector<oracle::IrreducibleComponent> components;
  friend bool operator==(const DecomposeReport&, const DecomposeReport&) = default;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct ReproduceReport {
  std::vector<CheckOutcome> checks;
  bool all_passed() const;
  friend bool operator==(const ReproduceReport&, const ReproduceReport&) = default;
};

json instance_to_json(const BorelInstance& inst);
BorelInstance instance_from_json(const json& j);

/// Monomial as text, e.g. "x2*x4*x9"; parsing accepts text or an exponent list.
json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const json& j, std::size_t n);

json to_json(const GeneratorsReport& r);
json to_json(const DualReport& r);
json to_json(const FacetsReport& r);
json to_json(const ScmReport& r);
json to_json(const SortReport& r);
json to_json(const ReesGbReport& r);
json to_json(const ExchangeReport& r);
json to_json(const LexWitnessCliReport& r);
json to_json(const FiberDimReport& r);
json to_json(const DepthReport& r);
json to_json(const LimdepthReport& r);
json to_json(const AssReport& r);
json to_json(const PersistenceReport& r);
json to_json(const DecomposeReport& r);
json to_json(const ReproduceReport& r);

/// Inverse of to_json for report type T.
template <typename T>
T from_json(const json& j);

}  // namespace tspread
