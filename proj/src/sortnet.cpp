#include "tspread/sortnet.hpp"

#include <algorithm>
#include <set>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

void require_equal_degrees(std::span<const Monomial> ms) {
  for (const auto& m : ms) {
    if (m.ambient() != ms.front().ambient()) throw InvalidInput("ambient mismatch");
    if (m.degree() != ms.front().degree()) throw InvalidInput("sorting needs monomials of one degree");
  }
}

}  // namespace

std::pair<Monomial, Monomial> sort_pair(const Monomial& v, const Monomial& w) {
  if (v.ambient() != w.ambient()) throw InvalidInput("ambient mismatch");
  if (v.degree() != w.degree()) throw InvalidInput("sort_pair: degrees " + std::to_string(v.degree()) + " and " + std::to_string(w.degree()));
  std::vector<int> merged = v.index_sequence();
  std::vector<int> other = w.index_sequence();
  merged.insert(merged.end(), other.begin(), other.end());
  std::sort(merged.begin(), merged.end());
  std::vector<int> odd, even;
  for (std::size_t k = 0; k < merged.size(); ++k) (k % 2 == 0 ? odd : even).push_back(merged[k]);
  return {Monomial::from_indices(v.ambient(), odd), Monomial::from_indices(v.ambient(), even)};
}

bool is_sorted_pair(const Monomial& v, const Monomial& w) {
  auto [a, b] = sort_pair(v, w);
  return a == v && b == w;
}

bool is_sorted_tuple(std::span<const Monomial> tuple) {
  if (tuple.empty()) return true;
  require_equal_degrees(tuple);
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (!is_sorted_pair(tuple[i], tuple[j])) return false;
  return true;
}

Monomial SortedTuple::product() const {
  if (factors_.empty()) throw InvalidInput("empty tuple has no ambient");
  Monomial p(factors_.front().ambient());
  for (const auto& f : factors_) p = tspread::product(p, f);
  return p;
}

SortedTuple sort_tuple(std::span<const Monomial> tuple) {
  SortedTuple out;
  out.factors_.assign(tuple.begin(), tuple.end());
  if (tuple.empty()) return out;
  require_equal_degrees(tuple);
  auto& f = out.factors_;
  const std::size_t bound = std::max<std::size_t>(1, f.size() * f.front().degree() * f.front().ambient());
  for (std::size_t sweep = 0; sweep <= bound; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        auto [a, b] = sort_pair(f[i], f[j]);
        if (a != f[i] || b != f[j]) {
          f[i] = std::move(a);
          f[j] = std::move(b);
          changed = true;
        }
      }
    }
    if (!changed) return out;
  }
  throw ClaimViolation("sort_tuple did not reach a fixpoint within " + std::to_string(bound) + " sweeps");
}

SortabilityResult sortable_check(std::span<const Monomial> gens) {
  SortabilityResult result;
  if (gens.empty()) return result;
  require_equal_degrees(gens);
  std::set<Monomial> members(gens.begin(), gens.end());
  for (const auto& v : gens) {
    for (const auto& w : gens) {
      auto sorted = sort_pair(v, w);
      if (!members.count(sorted.first) || !members.count(sorted.second)) {
        result.ok = false;
        result.pair = {v, w};
        result.sorted = std::move(sorted);
        return result;
      }
    }
  }
  return result;
}

}  // namespace tspread
