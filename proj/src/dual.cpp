#include "tspread/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

// Calls fn(starts) for every j_1 < ... < j_r with j_l <= i_l, gaps >= t, and
// j_r <= last_cap.
template <typename Fn>
void for_each_start_sequence(const BorelInstance& inst, int r, int last_cap, Fn&& fn) {
  std::vector<int> starts(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int k) -> void {
    if (k == r) {
      fn(starts);
      return;
    }
    int lo = k == 0 ? 1 : starts[static_cast<std::size_t>(k - 1)] + inst.t();
    int hi = inst.i(k + 1);
    if (k == r - 1) hi = std::min(hi, last_cap);
    for (int j = lo; j <= hi; ++j) {
      starts[static_cast<std::size_t>(k)] = j;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

std::vector<int> interval_union(const std::vector<int>& starts, int t) {
  std::vector<int> members;
  for (int j : starts)
    for (int x = j; x < j + t; ++x) members.push_back(x);
  return members;
}

// Facets for an instance with i_d = n.
std::vector<Facet> facets_full_support(const BorelInstance& inst) {
  const int n = inst.n();
  const int d = inst.degree();
  const int t = inst.t();
  std::vector<Facet> out;

  out.push_back({FacetForm::F2, {}, 0, IndexSet::interval(inst.i(1) + 1, n)});

  for (int s = 2; s <= d - 1; ++s) {
    // j_s = i_s + 1 must keep distance t from j_{s-1}.
    for_each_start_sequence(inst, s - 1, inst.i(s) + 1 - t, [&](const std::vector<int>& starts) {
      std::vector<int> members = interval_union(starts, t);
      for (int x = inst.i(s) + 1; x <= n; ++x) members.push_back(x);
      out.push_back({FacetForm::F3, starts, s, IndexSet(std::move(members))});
    });
  }

  for_each_start_sequence(inst, d - 1, n, [&](const std::vector<int>& starts) {
    out.push_back({FacetForm::F1, starts, 0, IndexSet(interval_union(starts, t))});
  });

  std::set<IndexSet> seen;
  std::vector<Facet> unique;
  for (auto& f : out)
    if (seen.insert(f.members).second) unique.push_back(std::move(f));
  return unique;
}

}  // namespace

std::string to_string(FacetForm form) {
  switch (form) {
    case FacetForm::F1: return "F1";
    case FacetForm::F2: return "F2";
    case FacetForm::F3: return "F3";
  }
  return "?";
}

FacetForm facet_form_from_string(const std::string& name) {
  if (name == "F1") return FacetForm::F1;
  if (name == "F2") return FacetForm::F2;
  if (name == "F3") return FacetForm::F3;
  throw InvalidInput("unknown facet form '" + name + "'");
}

Monomial interval_monomial(int n, int start, int t) {
  if (start < 1 || start + t - 1 > n) throw InvalidInput("interval leaves 1..n");
  return Monomial::from_set(static_cast<std::size_t>(n), IndexSet::interval(start, start + t - 1));
}

std::vector<Facet> facets(const BorelInstance& inst) {
  if (inst.u().back() == inst.n()) return facets_full_support(inst);
  auto reduced = facets_full_support(inst.restricted());
  IndexSet cone = IndexSet::interval(inst.u().back() + 1, inst.n());
  for (auto& f : reduced) f.members = f.members.united(cone);
  return reduced;
}

std::vector<DualGenerator> dual_generators(const BorelInstance& inst) {
  std::vector<DualGenerator> out;
  for (const Facet& f : facets(inst))
    out.push_back({Monomial::from_set(static_cast<std::size_t>(inst.n()), f.members.complement(inst.n())), f.form});
  return out;
}

std::vector<DualGenerator> scm_order(std::span<const DualGenerator> duals, const BorelInstance& inst) {
  const Monomial first = Monomial::from_set(static_cast<std::size_t>(inst.n()), IndexSet::interval(1, inst.i(1)));
  std::vector<DualGenerator> f2, f3, f1;
  for (const auto& g : duals) {
    switch (g.form) {
      case FacetForm::F2: f2.push_back(g); break;
      case FacetForm::F3: f3.push_back(g); break;
      case FacetForm::F1: f1.push_back(g); break;
    }
  }
  if (f2.size() != 1 || f2.front().monomial != first)
    throw HypothesisViolation("dual generators must contain x1*...*x" + std::to_string(inst.i(1)) + " exactly once");
  auto by_lex = [](const DualGenerator& a, const DualGenerator& b) { return PurelexGreater{}(a.monomial, b.monomial); };
  std::sort(f3.begin(), f3.end(), by_lex);
  std::sort(f1.begin(), f1.end(), by_lex);
  std::vector<DualGenerator> out = std::move(f2);
  out.insert(out.end(), f3.begin(), f3.end());
  out.insert(out.end(), f1.begin(), f1.end());
  return out;
}

LinearQuotientsResult linear_quotients_check(std::span<const Monomial> ordered) {
  LinearQuotientsResult result;
  if (ordered.empty()) return result;
  const std::size_t n = ordered.front().ambient();
  for (const auto& w : ordered)
    if (w.ambient() != n) throw InvalidInput("ambient mismatch in generator list");
  {
    std::set<Monomial> distinct(ordered.begin(), ordered.end());
    if (distinct.size() != ordered.size()) throw InvalidInput("generator list has repeated monomials");
  }

  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> colon_masks;
  std::vector<std::uint64_t> vars(words);

  for (std::size_t j = 0; j < ordered.size(); ++j) {
    auto wj = ordered[j].exponents();
    colon_masks.assign(j * words, 0);
    std::fill(vars.begin(), vars.end(), 0);
    for (std::size_t g = 0; g < j; ++g) {
      auto wg = ordered[g].exponents();
      unsigned deg = 0;
      std::size_t last = 0;
      std::uint64_t* mask = colon_masks.data() + g * words;
      for (std::size_t l = 0; l < n; ++l) {
        if (wg[l] > wj[l]) {
          deg += wg[l] - wj[l];
          mask[l / 64] |= std::uint64_t{1} << (l % 64);
          last = l;
        }
      }
      if (deg == 1) vars[last / 64] |= std::uint64_t{1} << (last % 64);
    }
    for (std::size_t g = 0; g < j; ++g) {
      const std::uint64_t* mask = colon_masks.data() + g * words;
      bool hit = false;
      for (std::size_t w = 0; w < words && !hit; ++w) hit = (mask[w] & vars[w]) != 0;
      if (!hit) {
        result.ok = false;
        result.failed_index = j + 1;
        result.offending_index = g + 1;
        return result;
      }
    }
    std::vector<int> vs;
    for (std::size_t l = 0; l < n; ++l)
      if (vars[l / 64] >> (l % 64) & 1) vs.push_back(static_cast<int>(l + 1));
    result.profiles.push_back({ordered[j], IndexSet(std::move(vs))});
  }
  return result;
}

std::vector<IndexSet> minimal_primes(const BorelInstance& inst) {
  std::vector<IndexSet> out;
  for (const Facet& f : facets(inst)) out.push_back(f.members.complement(inst.n()));
  std::sort(out.begin(), out.end());
  return out;
}

int krull_dimension(const BorelInstance& inst) {
  std::size_t best = 0;
  for (const Facet& f : facets(inst)) best = std::max(best, f.members.size());
  return static_cast<int>(best);
}

}  // namespace tspread
