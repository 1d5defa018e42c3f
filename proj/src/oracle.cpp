#include "tspread/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "tspread/errors.hpp"

namespace tspread::oracle {

std::vector<Monomial> minimize(std::span<const Monomial> gens) {
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Monomial> kept;
  for (auto& m : sorted) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), PurelexGreater{});
  return kept;
}

bool ideal_contains(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool ideal_equal(std::span<const Monomial> a, std::span<const Monomial> b) {
  auto within = [](std::span<const Monomial> x, std::span<const Monomial> y) {
    return std::all_of(x.begin(), x.end(), [&](const Monomial& m) { return ideal_contains(y, m); });
  };
  return within(a, b) && within(b, a);
}

std::vector<Monomial> intersect(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(lcm(x, y));
  return minimize(out);
}

std::vector<Monomial> colon_ideal(std::span<const Monomial> gens, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(colon_monomial(g, m));
  return minimize(out);
}

// ------------------------------------------------------ irreducible components

std::vector<Monomial> IrreducibleComponent::generators() const {
  std::vector<Monomial> out;
  for (int i : powers_.support()) {
    Monomial g(powers_.ambient());
    g.set_exponent(i, powers_.exponent(i));
    out.push_back(std::move(g));
  }
  return out;
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  // (x_i^{a_i}) contains (x_i^{b_i}) iff every b-generator is divisible by an
  // a-generator: same variable, smaller power.
  for (int i : other.powers_.support())
    if (powers_.exponent(i) == 0 || powers_.exponent(i) > other.powers_.exponent(i)) return false;
  return true;
}

std::string IrreducibleComponent::to_string() const {
  std::string s = "(";
  bool first = true;
  for (const auto& g : generators()) {
    if (!first) s += ", ";
    s += g.to_string();
    first = false;
  }
  return s + ")";
}

namespace {

void prune_redundant(std::vector<Monomial>& comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<Monomial> kept;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      redundant = a != b && IrreducibleComponent(comps[a]).contains(IrreducibleComponent(comps[b]));
    if (!redundant) kept.push_back(comps[a]);
  }
  comps = std::move(kept);
}

bool component_has(const Monomial& q, const Monomial& g) {
  for (int i : g.support())
    if (q.exponent(i) != 0 && q.exponent(i) <= g.exponent(i)) return true;
  return false;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(std::span<const Monomial> gens, std::size_t n,
                                                            const Guards& guards) {
  if (gens.empty()) throw InvalidInput("decomposition of the zero ideal");
  if (n > guards.max_decomposition_vars)
    throw GuardExceeded("irreducible decomposition limited to " + std::to_string(guards.max_decomposition_vars) +
                        " variables");
  for (const auto& g : gens)
    if (g.ambient() != n) throw InvalidInput("ambient mismatch");
  auto minimal = minimize(gens);
  std::vector<IrreducibleComponent> out;
  if (minimal.size() == 1 && minimal.front().is_one()) return out;
  std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) {
    if (a.support().size() != b.support().size()) return a.support().size() < b.support().size();
    return PurelexGreater{}(a, b);
  });

  std::vector<Monomial> comps{Monomial(n)};
  for (const auto& g : minimal) {
    std::vector<Monomial> next;
    for (const auto& q : comps) {
      if (component_has(q, g)) {
        next.push_back(q);
        continue;
      }
      for (int i : g.support()) {
        Monomial r = q;
        if (r.exponent(i) == 0 || r.exponent(i) > g.exponent(i)) r.set_exponent(i, g.exponent(i));
        next.push_back(std::move(r));
      }
    }
    prune_redundant(next);
    if (next.size() > guards.max_components)
      throw GuardExceeded("irreducible decomposition exceeded " + std::to_string(guards.max_components) +
                          " components");
    comps = std::move(next);
  }
  for (auto& c : comps) out.emplace_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> maximal_nonfaces(std::span<const Monomial> gens, std::size_t n, const Guards& guards) {
  if (n > guards.max_facet_vars)
    throw GuardExceeded("face enumeration limited to " + std::to_string(guards.max_facet_vars) + " variables");
  std::vector<std::uint32_t> masks;
  for (const auto& g : gens) {
    if (g.ambient() != n) throw InvalidInput("ambient mismatch");
    if (!g.is_squarefree()) throw InvalidInput("Stanley-Reisner faces need a squarefree ideal");
    std::uint32_t mask = 0;
    for (int i : g.support()) mask |= std::uint32_t{1} << (i - 1);
    masks.push_back(mask);
  }
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<char> face(total);
  for (std::uint32_t s = 0; s < total; ++s)
    face[s] = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & s) == m; });
  std::vector<IndexSet> out;
  for (std::uint32_t s = 0; s < total; ++s) {
    if (!face[s]) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (!(s & bit) && face[s | bit]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> members;
    for (std::size_t j = 0; j < n; ++j)
      if (s >> j & 1) members.push_back(static_cast<int>(j + 1));
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ marked reduction

MarkedReducer::MarkedReducer(std::span<const ToricBinomial> gb) : gb_(gb.begin(), gb.end()) {
  if (gb_.empty()) return;
  n_ = gb_.front().lhs.x.ambient();
  const std::size_t m = gb_.front().lhs.t.ambient();
  buckets_.resize(n_ + m);
  for (std::size_t k = 0; k < gb_.size(); ++k) {
    const auto& lhs = gb_[k].lhs;
    if (lhs.x.ambient() != n_ || lhs.t.ambient() != m || gb_[k].rhs.x.ambient() != n_ || gb_[k].rhs.t.ambient() != m)
      throw InvalidInput("binomials over different presentation rings");
    if (lhs.is_one()) throw InvalidInput("marked initial term is 1");
    auto vars = lhs.variables();
    const PresVar& first = vars.front();
    std::size_t slot = first.kind == PresVar::Kind::X ? std::size_t(first.index - 1) : n_ + std::size_t(first.index - 1);
    buckets_[slot].push_back(k);
  }
}

std::optional<std::size_t> MarkedReducer::find_reducer(const ReesMonomial& m) const {
  if (gb_.empty()) return std::nullopt;
  std::optional<std::size_t> best;
  auto scan = [&](std::size_t slot) {
    for (std::size_t k : buckets_[slot]) {
      if (best && k >= *best) break;  // buckets are in increasing index order
      if (divides(gb_[k].lhs, m)) best = k;
    }
  };
  for (int i : m.x.support()) scan(std::size_t(i - 1));
  for (int i : m.t.support()) scan(n_ + std::size_t(i - 1));
  return best;
}

ReductionResult MarkedReducer::reduce(PresPolynomial poly, std::optional<std::size_t> step_bound) const {
  ReductionResult result;
  for (auto it = poly.begin(); it != poly.end();)
    it = it->second == 0 ? poly.erase(it) : std::next(it);
  if (!step_bound) {
    unsigned max_degree = 1;
    for (const auto& [mono, coeff] : poly) max_degree = std::max(max_degree, mono.degree());
    step_bound = 4 * std::size_t{max_degree} * std::max<std::size_t>(1, gb_.size());
  }
  while (true) {
    bool reduced = false;
    for (auto it = poly.begin(); it != poly.end(); ++it) {
      auto k = find_reducer(it->first);
      if (!k) continue;
      if (++result.steps > *step_bound) {
        result.conclusive = false;
        result.remainder = std::move(poly);
        return result;
      }
      const ToricBinomial& b = gb_[*k];
      ReesMonomial replacement = product(quotient(it->first, b.lhs), b.rhs);
      long long coeff = it->second;
      poly.erase(it);
      long long& slot = poly[replacement];
      slot += coeff;
      if (slot == 0) poly.erase(replacement);
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  result.remainder = std::move(poly);
  return result;
}

ReductionResult marked_reduce(const PresPolynomial& poly, std::span<const ToricBinomial> gb) {
  return MarkedReducer(gb).reduce(poly);
}

}  // namespace tspread::oracle
