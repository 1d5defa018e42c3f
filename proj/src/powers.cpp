#include "tspread/powers.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "tspread/errors.hpp"
#include "tspread/oracle.hpp"
#include "tspread/sortnet.hpp"

namespace tspread {

std::vector<Monomial> power_generators(const BorelInstance& inst, int k, const Guards& guards) {
  if (k < 1) throw InvalidInput("power k must be >= 1");
  const auto gens = generators(inst);
  const std::size_t m = gens.size();
  std::vector<char> sorted_pair(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) sorted_pair[a * m + b] = is_sorted_pair(gens[a], gens[b]);

  std::vector<Monomial> out;
  std::vector<std::size_t> chosen;
  std::vector<Monomial> partial{Monomial(static_cast<std::size_t>(inst.n()))};
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == static_cast<std::size_t>(k)) {
      out.push_back(partial.back());
      if (out.size() > guards.max_power_generators)
        throw GuardExceeded("|G(I^" + std::to_string(k) + ")| exceeds " + std::to_string(guards.max_power_generators));
      return;
    }
    for (std::size_t c = from; c < m; ++c) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t p) { return sorted_pair[p * m + c]; })) continue;
      chosen.push_back(c);
      partial.push_back(product(partial.back(), gens[c]));
      self(self, c);
      partial.pop_back();
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), PurelexGreater{});
  return out;
}

std::vector<QuotientProfile> lex_quotient_profiles(const BorelInstance& inst, int k, const Guards& guards) {
  auto gens = power_generators(inst, k, guards);
  auto run = linear_quotients_check(gens);
  if (!run.ok)
    throw ClaimViolation("G(I^" + std::to_string(k) + ") of " + inst.to_string() +
                         " has no linear quotients in lex order: fails at position " +
                         std::to_string(run.failed_index) + " against " + std::to_string(run.offending_index));
  return std::move(run.profiles);
}

DepthReport depth_report(const BorelInstance& inst, int k, const Guards& guards) {
  auto profiles = lex_quotient_profiles(inst, k, guards);
  DepthReport report;
  report.n = inst.n();
  report.k = k;
  std::size_t best = 0;
  for (const auto& p : profiles) {
    if (!report.witness || p.r() > best) {
      best = p.r();
      report.witness = p.generator;
    }
  }
  report.projdim = static_cast<int>(best) + 1;
  report.depth = inst.n() - report.projdim;
  return report;
}

bool is_cohen_macaulay(const BorelInstance& inst, const Guards& guards) {
  return depth_report(inst, 1, guards).depth == krull_dimension(inst);
}

// ------------------------------------------------------------ limit depth

bool LimdepthWitness::verified() const {
  if (steps.empty()) return false;
  for (const auto& s : steps)
    if (!s.ok()) return false;
  return colon_variables == IndexSet::interval(1, static_cast<int>(w.ambient()) - 1);
}

LimdepthWitness limdepth_witness(const BorelInstance& inst, int k, const Guards& guards) {
  const int n = inst.n();
  const int d = inst.degree();
  const int t = inst.t();
  if (inst.i(1) < t + 1)
    throw HypothesisViolation("limit-depth witness needs i_1 >= t+1; here i_1 = " + std::to_string(inst.i(1)) +
                              ", t = " + std::to_string(t) +
                              (inst.i(1) == t ? " (the Veronese case, whose limit depth is d-1)" : ""));
  if (inst.i(d) != n) throw HypothesisViolation("limit-depth witness needs i_d = n");
  if (k < d) throw HypothesisViolation("limit-depth witness needs k >= d");

  const std::size_t nn = static_cast<std::size_t>(n);
  LimdepthWitness out;
  // v_r keeps the first d-r positions at 1, t+1, ..., (p-1)t+1 and takes i_p
  // for the remaining positions p > d-r.
  for (int r = 1; r <= d; ++r) {
    std::vector<int> idx;
    for (int p = 1; p <= d; ++p) idx.push_back(p <= d - r ? (p - 1) * t + 1 : inst.i(p));
    out.chain.push_back(Monomial::from_indices(nn, idx));
  }
  const Monomial u = inst.u_monomial();
  Monomial tail(nn);
  for (int e = 0; e < k - d; ++e) tail = product(tail, u);
  out.w = tail;
  for (const auto& v : out.chain) out.w = product(out.w, v);

  const auto gens = generators(inst);
  const std::set<Monomial> gen_set(gens.begin(), gens.end());
  for (int j = 1; j <= n - 1; ++j) {
    WitnessStep step;
    step.j = j;
    // i_{s-1} <= j < i_s with i_0 = 1.
    for (int s = 1; s <= d; ++s) {
      int lower = s == 1 ? 1 : inst.i(s - 1);
      if (lower <= j && j < inst.i(s)) {
        step.s = s;
        break;
      }
    }
    if (step.s == 0) throw ClaimViolation("no interval [i_{s-1}, i_s) contains j = " + std::to_string(j));
    const int pos = d - step.s + 1;
    step.replaced = out.chain[static_cast<std::size_t>(pos - 1)];
    Monomial moved = step.replaced;
    moved.set_exponent(j, static_cast<Monomial::Exponent>(moved.exponent(j) + 1));
    moved.set_exponent(inst.i(step.s), static_cast<Monomial::Exponent>(moved.exponent(inst.i(step.s)) - 1));
    step.replacement = moved;
    step.replacement_is_generator = gen_set.count(moved) > 0;
    step.w_prime = product(quotient(out.w, step.replaced), step.replacement);
    step.lex_greater = PurelexGreater{}(step.w_prime, out.w);
    step.identity_holds = product(Monomial::variable(nn, j), out.w) == product(Monomial::variable(nn, inst.i(step.s)), step.w_prime);
    out.steps.push_back(std::move(step));
  }

  // Independent route: scan G(I^k) for the lex-earlier generators dividing x_l w.
  const auto pgens = power_generators(inst, k, guards);
  std::unordered_set<Monomial, MonomialHash> earlier;
  bool found_w = false;
  for (const auto& g : pgens) {
    if (g == out.w) {
      found_w = true;
      break;
    }
    earlier.insert(g);
  }
  if (!found_w) throw ClaimViolation("witness w is not a minimal generator of I^k");
  std::vector<int> vars;
  for (int l = 1; l <= n; ++l) {
    bool hit = false;
    for (int s : out.w.support()) {
      if (s == l) continue;
      Monomial cand = out.w;
      cand.set_exponent(l, static_cast<Monomial::Exponent>(cand.exponent(l) + 1));
      cand.set_exponent(s, static_cast<Monomial::Exponent>(cand.exponent(s) - 1));
      if (earlier.count(cand)) {
        hit = true;
        break;
      }
    }
    if (hit) vars.push_back(l);
  }
  out.colon_variables = IndexSet(std::move(vars));
  return out;
}

bool veronese_support_obstruction(const BorelInstance& inst, int k, const Guards& guards) {
  if (!inst.is_veronese() || inst.i(1) != inst.t())
    throw HypothesisViolation("obstruction applies to u = x_t x_2t ... x_dt in n = dt variables; got " + inst.to_string());
  for (const auto& p : lex_quotient_profiles(inst, k, guards))
    for (int j : p.variables)
      if (inst.u().contains(j)) return false;
  return true;
}

// ------------------------------------------------------------ associated primes

std::vector<IndexSet> associated_primes(std::span<const Monomial> gens, std::size_t n, const Guards& guards) {
  std::set<IndexSet> primes;
  for (const auto& c : oracle::irreducible_decomposition(gens, n, guards)) primes.insert(c.radical());
  return {primes.begin(), primes.end()};
}

std::optional<Monomial> ass_witness_oracle(std::span<const Monomial> gens, std::size_t n, const IndexSet& prime,
                                           const Guards& guards) {
  if (gens.empty()) throw InvalidInput("witness search on the zero ideal");
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : gens) {
    if (g.ambient() != n) throw InvalidInput("ambient mismatch");
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max<unsigned>(bound[i], g.exponents()[i]);
  }
  std::size_t space = 1;
  for (auto b : bound) {
    space *= b + 1;
    if (space > guards.max_witness_search)
      throw GuardExceeded("witness search space exceeds " + std::to_string(guards.max_witness_search));
  }
  const auto mins = oracle::minimize(gens);
  Monomial m(n);
  for (std::size_t step = 0; step < space; ++step) {
    if (!oracle::ideal_contains(mins, m)) {
      // (I : m) = P iff each x_i (i in P) lies in I : m and every generator of
      // I : m is divisible by some x_i with i in P.
      bool ok = true;
      for (int i : prime) {
        Monomial xm = m;
        xm.set_exponent(i, static_cast<Monomial::Exponent>(xm.exponent(i) + 1));
        if (!oracle::ideal_contains(mins, xm)) {
          ok = false;
          break;
        }
      }
      for (std::size_t g = 0; ok && g < mins.size(); ++g) {
        Monomial c = colon_monomial(mins[g], m);
        ok = std::any_of(prime.begin(), prime.end(), [&](int i) { return c.exponent(i) > 0; });
      }
      if (ok) return m;
    }
    // odometer over exponent vectors, x_n fastest
    for (std::size_t pos = n; pos-- > 0;) {
      int var = static_cast<int>(pos + 1);
      if (m.exponent(var) < bound[pos]) {
        m.set_exponent(var, static_cast<Monomial::Exponent>(m.exponent(var) + 1));
        break;
      }
      m.set_exponent(var, 0);
    }
  }
  return std::nullopt;
}

PersistenceResult persistence_check(const BorelInstance& inst, int kmax, const Guards& guards) {
  if (kmax < 1) throw InvalidInput("kmax must be >= 1");
  PersistenceResult result;
  for (int k = 1; k <= kmax; ++k)
    result.ass.push_back(associated_primes(power_generators(inst, k, guards), static_cast<std::size_t>(inst.n()), guards));
  for (int k = 1; k < kmax; ++k) {
    const auto& lo = result.ass[static_cast<std::size_t>(k - 1)];
    const auto& hi = result.ass[static_cast<std::size_t>(k)];
    if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) {
      result.ok = false;
      result.violating_k = k;
      break;
    }
  }
  return result;
}

}  // namespace tspread
