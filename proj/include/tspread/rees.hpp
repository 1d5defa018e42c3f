#pragma once

// The Rees algebra presentation of B_t(u): the closed-form Groebner basis of
// its toric ideal, verification by marked Buchberger reduction, the exchange
// and x-conditions, and the fiber ring.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/toric.hpp"

namespace tspread {

/// R = S[t_v : v in G(I)] with t-variables numbered by the position (1-based)
/// of v in generators(inst), i.e. t_1 > t_2 > ... follows decreasing pure lex.
class ReesPresentation {
 public:
  explicit ReesPresentation(BorelInstance inst);

  const BorelInstance& instance() const { return inst_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t n() const { return static_cast<std::size_t>(inst_.n()); }
  std::size_t m() const { return gens_.size(); }

  /// 1-based position of `v` in gens(), or nullopt if v is not a generator.
  std::optional<int> t_index(const Monomial& v) const;
  const Monomial& generator(int t_index) const { return gens_[static_cast<std::size_t>(t_index - 1)]; }

  ReesMonomial one() const;
  ReesMonomial x_var(int i) const;
  ReesMonomial t_var(const Monomial& v) const;
  /// t_{v_1} ... t_{v_r}; throws InvalidInput if some v is not a generator.
  ReesMonomial t_product(std::span<const Monomial> vs) const;

  /// phi(x^a t^b) = x^a * prod v^{b_v} * t^{|b|}.
  struct Image {
    Monomial x;
    unsigned t_power;
    friend bool operator==(const Image&, const Image&) = default;
  };
  Image image(const ReesMonomial& m) const;

  /// "x1*t[x2*x4*x9]" or "1".
  std::string format(const ReesMonomial& m) const;
  /// Inverse of format().
  ReesMonomial parse(const std::string& text) const;

 private:
  BorelInstance inst_;
  std::vector<Monomial> gens_;
  std::map<Monomial, int> index_;
};

/// t_v t_w - t_{v'} t_{w'} for every unordered pair {v, w} whose sorting
/// {v', w'} differs; marked on t_v t_w.
std::vector<ToricBinomial> sorting_relations(const ReesPresentation& pres);

/// x_i t_v - x_j t_w with i < j, w = x_i v / x_j in G(I), j largest such;
/// marked on x_i t_v.
std::vector<ToricBinomial> x_relations(const ReesPresentation& pres);

/// x-relations followed by sorting relations.
std::vector<ToricBinomial> reduced_gb(const ReesPresentation& pres);

/// lhs != rhs and phi(lhs) = phi(rhs).
bool verify_kernel(const ToricBinomial& b, const ReesPresentation& pres);

struct BuchbergerResult {
  enum class Status { Verified, Failed, Inconclusive };
  Status status = Status::Verified;
  /// 0-based indices of the S-pair that failed or hit the step bound.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  PresPolynomial remainder;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped_coprime = 0;

  friend bool operator==(const BuchbergerResult&, const BuchbergerResult&) = default;
};

std::string to_string(BuchbergerResult::Status status);

/// Every S-pair of marked initials reduces to zero under marked reduction.
/// Pairs with coprime initials are skipped (they always reduce to zero).
BuchbergerResult buchberger_verify(std::span<const ToricBinomial> gb);

/// Every marked initial has x-degree <= 1 and t-degree <= 2.
bool x_condition_check(std::span<const ToricBinomial> gb);

struct ReducednessReport {
  bool initials_squarefree = true;
  bool initials_antichain = true;
  bool tails_standard = true;
  bool ok() const { return initials_squarefree && initials_antichain && tails_standard; }

  friend bool operator==(const ReducednessReport&, const ReducednessReport&) = default;
};

ReducednessReport reducedness_check(std::span<const ToricBinomial> gb);

/// Standard t-monomials of degree N for the sorting markings, as sorted
/// N-tuples of t-indices (non-decreasing).
std::vector<std::vector<int>> standard_t_monomials(const ReesPresentation& pres, std::size_t degree);

struct ExchangeResult {
  bool ok = true;
  std::size_t pairs_checked = 0;
  /// Failing pair (u-tuple, v-tuple) and the index q, when !ok.
  std::vector<int> lower;
  std::vector<int> upper;
  int q = 0;

  friend bool operator==(const ExchangeResult&, const ExchangeResult&) = default;
};

/// The l-exchange property in degree N for the sorting order: whenever two
/// standard monomials agree in x_1..x_{q-1} and the first is smaller in x_q,
/// some factor u_delta of the first and some j > q in supp(u_delta) give
/// x_q u_delta / x_j in I.
ExchangeResult ell_exchange_check(const ReesPresentation& pres, std::size_t degree);

struct LexWitnessReport {
  std::size_t quadratic_binomials = 0;
  std::size_t quadratic_initials = 0;
  /// Quadratic lex-initial monomials dividing the cubic.
  std::vector<ReesMonomial> dividing_initials;
  bool divisor_found() const { return !dividing_initials.empty(); }

  friend bool operator==(const LexWitnessReport&, const LexWitnessReport&) = default;
};

/// Lex order on t-monomials with t_1 > t_2 > ...
bool t_lex_greater(const ReesMonomial& a, const ReesMonomial& b);

/// All quadratic binomials of the fiber toric ideal, their lex-initial terms,
/// and which of them divide the t-monomial `cubic`.
LexWitnessReport lex_quadratic_witness(const ReesPresentation& pres, const ReesMonomial& cubic);

/// Rank over Q of the exponent matrix of G(I): the Krull dimension of K[G(I)].
int fiber_dimension(const BorelInstance& inst);

/// Exact rank of an integer matrix (rows of equal length).
int integer_matrix_rank(std::vector<std::vector<long long>> rows);

}  // namespace tspread
