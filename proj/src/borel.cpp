#include "tspread/borel.hpp"

#include <algorithm>
#include <set>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

bool spread_ok(std::span<const int> idx, int t) {
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] - idx[k - 1] < t) return false;
  return true;
}

}  // namespace

BorelInstance::BorelInstance(int n, int t, IndexSet u) : n_(n), t_(t), u_(std::move(u)) {
  if (t_ < 1) throw InvalidInput("spread t must be >= 1");
  if (u_.empty()) throw InvalidInput("u must have degree >= 1");
  if (u_.back() > n_) throw InvalidInput("u uses x" + std::to_string(u_.back()) + " but n = " + std::to_string(n_));
  if (!spread_ok(u_.values(), t_)) throw InvalidInput("u = " + u_monomial().to_string() + " is not " + std::to_string(t_) + "-spread");
}

bool BorelInstance::is_veronese() const {
  int d = degree();
  for (int k = 1; k <= d; ++k)
    if (i(k) != n_ - (d - k) * t_) return false;
  return true;
}

std::string BorelInstance::to_string() const {
  return "B_" + std::to_string(t_) + "(" + u_monomial().to_string() + ") in " + std::to_string(n_) + " variables";
}

bool is_tspread(const Monomial& m, int t) {
  if (t >= 1 && !m.is_squarefree()) return false;
  auto seq = m.index_sequence();
  return spread_ok(seq, t);
}

std::vector<Monomial> generators(const BorelInstance& inst) {
  const int d = inst.degree();
  const int t = inst.t();
  std::vector<Monomial> out;
  std::vector<int> chosen(static_cast<std::size_t>(d));
  // Ascending j_1, then j_2, ... yields decreasing pure lex.
  auto rec = [&](auto&& self, int k) -> void {
    if (k == d) {
      out.push_back(Monomial::from_indices(static_cast<std::size_t>(inst.n()), chosen));
      return;
    }
    int lo = k == 0 ? 1 : chosen[static_cast<std::size_t>(k - 1)] + t;
    for (int j = lo; j <= inst.i(k + 1); ++j) {
      chosen[static_cast<std::size_t>(k)] = j;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool contains(const BorelInstance& inst, const Monomial& m) {
  if (m.ambient() != static_cast<std::size_t>(inst.n())) throw InvalidInput("ambient mismatch");
  // Greedy earliest choice of a t-spread chain inside supp(m); it reaches
  // position k as early as any chain can, so it succeeds iff some generator
  // divides m.
  int k = 0;
  int last = 0;
  for (int j : m.support()) {
    if (k > 0 && j < last + inst.t()) continue;
    if (j > inst.i(k + 1)) return false;
    last = j;
    if (++k == inst.degree()) return true;
  }
  return false;
}

std::vector<Monomial> closure_oracle(const BorelInstance& inst) {
  std::set<Monomial> seen{inst.u_monomial()};
  std::vector<Monomial> frontier{inst.u_monomial()};
  while (!frontier.empty()) {
    Monomial v = std::move(frontier.back());
    frontier.pop_back();
    for (int j : v.support()) {
      for (int i = 1; i < j; ++i) {
        Monomial moved = v;
        moved.set_exponent(j, static_cast<Monomial::Exponent>(moved.exponent(j) - 1));
        moved.set_exponent(i, static_cast<Monomial::Exponent>(moved.exponent(i) + 1));
        if (!is_tspread(moved, inst.t())) continue;
        if (seen.insert(moved).second) frontier.push_back(std::move(moved));
      }
    }
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), PurelexGreater{});
  return out;
}

bool is_tspread_strongly_stable(std::span<const Monomial> set, int t) {
  auto member = [&](const Monomial& m) {
    return std::any_of(set.begin(), set.end(), [&](const Monomial& g) { return divides(g, m); });
  };
  for (const Monomial& v : set) {
    for (int j : v.support()) {
      for (int i = 1; i < j; ++i) {
        Monomial moved = v;
        moved.set_exponent(j, static_cast<Monomial::Exponent>(moved.exponent(j) - 1));
        moved.set_exponent(i, static_cast<Monomial::Exponent>(moved.exponent(i) + 1));
        if (is_tspread(moved, t) && !member(moved)) return false;
      }
    }
  }
  return true;
}

bool support_covers_ambient(const BorelInstance& inst) {
  std::vector<bool> seen(static_cast<std::size_t>(inst.n()), false);
  for (const Monomial& g : generators(inst))
    for (int j : g.support()) seen[static_cast<std::size_t>(j - 1)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace tspread
