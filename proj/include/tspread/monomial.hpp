#pragma once

// Exponent-vector monomials over the fixed variable set x_1 > x_2 > ... > x_n.
// Variable indices are 1-based everywhere in the public interface.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tspread {

/// Strictly increasing list of 1-based variable indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws InvalidInput unless `indices` is strictly increasing and >= 1.
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices);

  /// The interval {first, ..., last}; empty when last < first.
  static IndexSet interval(int first, int last);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  int operator[](std::size_t pos) const { return indices_[pos]; }
  int front() const { return indices_.front(); }
  int back() const { return indices_.back(); }
  bool contains(int index) const;
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<int>& values() const { return indices_; }

  /// [n] minus this set.
  IndexSet complement(int n) const;
  bool is_subset_of(const IndexSet& other) const;
  IndexSet united(const IndexSet& other) const;

  std::string to_string() const;  // "{1,2,5}"

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> indices_;
};

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The unit monomial 1 in `n` variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  /// Product of x_i over `indices` (repeats raise the exponent).
  static Monomial from_indices(std::size_t n, std::span<const int> indices);
  static Monomial from_indices(std::size_t n, std::initializer_list<int> indices);
  static Monomial from_set(std::size_t n, const IndexSet& set);
  static Monomial variable(std::size_t n, int index);

  std::size_t ambient() const { return exps_.size(); }
  /// Exponent of x_index, 1-based.
  Exponent exponent(int index) const { return exps_[static_cast<std::size_t>(index - 1)]; }
  void set_exponent(int index, Exponent value) { exps_[static_cast<std::size_t>(index - 1)] = value; }
  std::span<const Exponent> exponents() const { return exps_; }

  unsigned degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  IndexSet support() const;
  /// Variable indices listed with multiplicity, ascending (x1^2*x3 -> 1,1,3).
  std::vector<int> index_sequence() const;

  /// "x2*x4*x9", "x1^2*x3", or "1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Storage order (exponent vectors compared lexicographically); a valid
  /// container key, and coincides with purelex_compare on equal ambients.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial product(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// a / gcd(a, b), i.e. the generator of (a) : b.
Monomial colon_monomial(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// a / b; throws InvalidInput unless b | a.
Monomial quotient(const Monomial& a, const Monomial& b);

/// Pure lexicographic order with x_1 > x_2 > ... > x_n, degree ignored.
std::strong_ordering purelex_compare(const Monomial& a, const Monomial& b);

/// Comparator sorting monomials in decreasing pure lex order.
struct PurelexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return purelex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Parses "x2*x4*x9", "x1^2*x3", "1" (whitespace ignored) in `n` variables.
Monomial parse_monomial(std::string_view text, std::size_t n);
/// Parses a comma-separated list of monomials; commas inside no context.
std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t n);
/// Smallest ambient n that fits every variable named in `text`.
std::size_t infer_ambient(std::string_view text);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace tspread
