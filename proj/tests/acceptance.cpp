#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "tspread/borel.hpp"
#include "tspread/dual.hpp"
#include "tspread/errors.hpp"
#include "tspread/oracle.hpp"
#include "tspread/powers.hpp"
#include "tspread/rees.hpp"
#include "tspread/reproduce.hpp"

using namespace tspread;

namespace {

constexpr std::uint64_t kSeed = 20240229;

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> body;  // empty string on success
};

std::vector<Monomial> scm_monomials(const BorelInstance& inst) {
  std::vector<Monomial> out;
  for (const auto& g : scm_order(dual_generators(inst), inst)) out.push_back(g.monomial);
  return out;
}

/// |G(B_t(u))| by counting chains j_1 < ... < j_d with j_k <= i_k and gaps >= t.
std::size_t count_generators(const BorelInstance& inst) {
  const int n = inst.n();
  std::vector<std::size_t> ways(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= inst.i(1); ++j) ways[static_cast<std::size_t>(j)] = 1;
  for (int k = 2; k <= inst.degree(); ++k) {
    std::vector<std::size_t> next(ways.size(), 0);
    std::size_t prefix = 0;
    for (int j = 1; j <= inst.i(k); ++j) {
      if (j - inst.t() >= 1) prefix += ways[static_cast<std::size_t>(j - inst.t())];
      next[static_cast<std::size_t>(j)] = prefix;
    }
    ways = std::move(next);
  }
  std::size_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

std::string ac1() {
  std::ostringstream out, err;
  if (int code = cli::run({"dual", "--n", "9", "--t", "2", "--u", "2,4,9"}, out, err); code != 0)
    return "dual exited with " + std::to_string(code) + ": " + err.str();
  std::vector<std::string> got;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) got.push_back(line.substr(0, line.find(' ')));
  const std::vector<std::string> expected{"x1*x2", "x1*x4", "x3*x4", "x1*x6*x7*x8*x9", "x3*x6*x7*x8*x9", "x5*x6*x7*x8*x9"};
  if (got != expected) return "unexpected dual list:\n" + out.str();
  std::ostringstream scm_out, scm_err;
  if (int code = cli::run({"scm-check", "--n", "9", "--t", "2", "--u", "2,4,9"}, scm_out, scm_err); code != 0)
    return "scm-check exited with " + std::to_string(code);
  return {};
}

std::string ac2() {
  std::mt19937_64 rng(kSeed);
  for (int c = 0; c < 100; ++c) {
    const auto inst = random_instance(rng, {1, 12, 4, false});
    const auto run = linear_quotients_check(scm_monomials(inst));
    if (!run.ok) return inst.to_string() + ": fails at " + std::to_string(run.failed_index);
  }
  return {};
}

std::string ac3() {
  for (int n = 1; n <= 8; ++n)
    for (const auto& inst : all_instances(n)) {
      std::set<IndexSet> closed;
      for (const auto& f : facets(inst)) closed.insert(f.members);
      const auto brute = oracle::maximal_nonfaces(generators(inst), static_cast<std::size_t>(n));
      if (closed != std::set<IndexSet>(brute.begin(), brute.end())) return inst.to_string() + ": facets differ";
      std::set<Monomial> duals, complements;
      for (const auto& g : dual_generators(inst)) duals.insert(g.monomial);
      for (const auto& f : brute) complements.insert(Monomial::from_set(static_cast<std::size_t>(n), f.complement(n)));
      if (duals != complements) return inst.to_string() + ": dual generators are not the facet complements";
    }
  return {};
}

std::string ac4() {
  for (int n = 1; n <= 8; ++n)
    for (const auto& inst : all_instances(n))
      if (generators(inst) != closure_oracle(inst)) return inst.to_string();
  return {};
}

std::string rees_sound(const BorelInstance& inst) {
  ReesPresentation pres(inst);
  const auto gb = reduced_gb(pres);
  for (const auto& b : gb)
    if (!verify_kernel(b, pres)) return inst.to_string() + ": " + pres.format(b.lhs) + " outside the kernel";
  if (!reducedness_check(gb).initials_squarefree) return inst.to_string() + ": non-squarefree initial term";
  if (!x_condition_check(gb)) return inst.to_string() + ": x-condition fails";
  const auto bb = buchberger_verify(gb);
  if (bb.status != BuchbergerResult::Status::Verified) return inst.to_string() + ": Buchberger " + to_string(bb.status);
  return {};
}

std::string ac5() {
  if (auto f = rees_sound(example_instance()); !f.empty()) return f;
  std::mt19937_64 rng(kSeed);
  int tested = 0;
  while (tested < 20) {
    const auto inst = random_instance(rng, {2, 12, 4, false});
    if (count_generators(inst) > 30) continue;
    ++tested;
    if (auto f = rees_sound(inst); !f.empty()) return f;
  }
  return {};
}

std::string ac6(std::size_t& tested) {
  for (int n = 1; n <= 16; ++n)
    for (const auto& inst : all_instances(n)) {
      if (count_generators(inst) > 15) continue;
      ++tested;
      const auto res = ell_exchange_check(ReesPresentation(inst), 2);
      if (!res.ok) return inst.to_string() + ": fails at q = " + std::to_string(res.q);
    }
  return {};
}

std::string ac7() {
  const BorelInstance inst(8, 2, {3, 5, 8});
  for (int k : {3, 4}) {
    const auto r = depth_report(inst, k);
    if (r.depth != 0 || r.projdim != 8)
      return "k = " + std::to_string(k) + ": depth " + std::to_string(r.depth) + ", projdim " + std::to_string(r.projdim);
  }
  const auto w = limdepth_witness(inst, 3);
  if (!w.verified()) return "witness colon is " + w.colon_variables.to_string();
  if (w.colon_variables != IndexSet::interval(1, 7)) return "witness colon is " + w.colon_variables.to_string();
  return {};
}

std::string ac8() {
  const BorelInstance inst(4, 2, {2, 4});
  for (int k : {2, 3, 4})
    if (int depth = depth_report(inst, k).depth; depth != 1)
      return "k = " + std::to_string(k) + ": depth " + std::to_string(depth);
  for (int k : {2, 3})
    if (!veronese_support_obstruction(inst, k)) return "supp(u) meets a colon at k = " + std::to_string(k);
  if (int dim = fiber_dimension(inst); dim != 3) return "fiber dimension " + std::to_string(dim);
  return {};
}

std::string ac9() {
  if (int dim = fiber_dimension(BorelInstance(8, 2, {3, 5, 8})); dim != 8) return "B_2(x3*x5*x8): " + std::to_string(dim);
  std::mt19937_64 rng(kSeed);
  int tested = 0;
  while (tested < 10) {
    const auto inst = random_instance(rng, {2, 12, 4, true});
    if (inst.i(1) < inst.t() + 1) continue;
    ++tested;
    if (int dim = fiber_dimension(inst); dim != inst.n()) return inst.to_string() + ": " + std::to_string(dim);
  }
  return {};
}

std::string ac10() {
  ReesPresentation pres(BorelInstance(10, 2, {6, 8, 10}));
  const auto cubic = parse_monomial_list("x1*x3*x8, x1*x7*x9, x2*x4*x6", 10);
  const auto partner = parse_monomial_list("x1*x3*x9, x1*x6*x8, x2*x4*x7", 10);
  const ToricBinomial f{pres.t_product(cubic), pres.t_product(partner), BinomialFamily::Other};
  if (!verify_kernel(f, pres)) return "f is not in the toric ideal";
  const auto w = lex_quadratic_witness(pres, f.lhs);
  if (w.divisor_found()) return pres.format(w.dividing_initials.front()) + " divides the cubic";
  return {};
}

std::string ac11() {
  for (const auto& inst : {BorelInstance(3, 1, {2, 3}), BorelInstance(4, 2, {2, 4})}) {
    const auto res = persistence_check(inst, 3);
    if (!res.ok) return inst.to_string() + ": fails at k = " + std::to_string(res.violating_k);
    const auto n = static_cast<std::size_t>(inst.n());
    for (int k = 1; k <= 3; ++k) {
      const auto gens = power_generators(inst, k);
      const auto& ass = res.ass[static_cast<std::size_t>(k - 1)];
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> p;
        for (int i = 1; i <= static_cast<int>(n); ++i)
          if (mask & (1u << (i - 1))) p.push_back(i);
        const IndexSet prime(p);
        const bool listed = std::binary_search(ass.begin(), ass.end(), prime);
        if (listed != ass_witness_oracle(gens, n, prime).has_value())
          return inst.to_string() + ": oracles disagree on " + prime.to_string() + " at k = " + std::to_string(k);
      }
    }
  }
  return {};
}

std::string ac12(std::size_t& tested) {
  auto check = [&](const BorelInstance& inst) -> std::string {
    ++tested;
    const auto primes = minimal_primes(inst);
    if (!std::binary_search(primes.begin(), primes.end(), IndexSet::interval(1, inst.i(1)))) return inst.to_string();
    return {};
  };
  for (int n = 1; n <= 10; ++n)
    for (const auto& inst : all_instances(n))
      if (auto f = check(inst); !f.empty()) return f;
  std::mt19937_64 rng(kSeed);
  for (int c = 0; c < 100; ++c)
    if (auto f = check(random_instance(rng, {1, 12, 4, false})); !f.empty()) return f;
  return {};
}

std::string ac13() {
  for (int t = 1; t <= 10; ++t)
    for (int d = 1; d * t <= 10; ++d) {
      std::vector<int> u;
      for (int p = 1; p <= d; ++p) u.push_back(p * t);
      const BorelInstance inst(d * t, t, IndexSet(u));
      const int depth = depth_report(inst, 1).depth, dim = krull_dimension(inst);
      if (depth != dim) return inst.to_string() + ": depth " + std::to_string(depth) + " != dim " + std::to_string(dim);
    }
  std::mt19937_64 rng(kSeed);
  int tested = 0;
  while (tested < 10) {
    const auto inst = random_instance(rng, {3, 12, 4, true});
    if (inst.degree() < 2 || inst.is_veronese()) continue;
    ++tested;
    const int depth = depth_report(inst, 1).depth, dim = krull_dimension(inst);
    if (depth >= dim) return inst.to_string() + ": depth " + std::to_string(depth) + ", dim " + std::to_string(dim);
  }
  return {};
}

}  // namespace

int main() {
  std::size_t ac6_count = 0, ac12_count = 0;
  const std::vector<Criterion> criteria{
      {"AC1", "worked duality example via the CLI", 1, ac1},
      {"AC2", "linear quotients on 100 random instances", 30, ac2},
      {"AC3", "facets equal maximal non-faces, n <= 8", 120, ac3},
      {"AC4", "generators equal the exchange closure, n <= 8", 60, ac4},
      {"AC5", "Rees Groebner basis soundness", 120, ac5},
      {"AC6", "l-exchange in degree 2, |G| <= 15", 60, [&] { return ac6(ac6_count); }},
      {"AC7", "depth 0 and limit-depth witness for B_2(x3*x5*x8)", 120, ac7},
      {"AC8", "Veronese depth, obstruction and analytic spread", 60, ac8},
      {"AC9", "fiber dimension n when i_1 >= t+1", 10, ac9},
      {"AC10", "lex Groebner basis not quadratic", 60, ac10},
      {"AC11", "persistence and agreement of the Ass oracles", 120, ac11},
      {"AC12", "(x1..x_{i_1}) is a minimal prime", 5, [&] { return ac12(ac12_count); }},
      {"AC13", "Cohen-Macaulay exactly for Veronese ideals", 60, ac13},
  };

  std::cout << "seed " << kSeed << "\n";
  int failures = 0;
  for (const auto& c : criteria) {
    std::string failure;
    const auto start = std::chrono::steady_clock::now();
    try {
      failure = c.body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.limit_seconds) failure = "over the time limit";
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, c.limit_seconds);
    std::cout << (failure.empty() ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << timing << ")";
    if (c.id == "AC6") std::cout << " [" << ac6_count << " instances, n <= 16]";
    if (c.id == "AC12") std::cout << " [" << ac12_count << " instances]";
    if (!failure.empty()) std::cout << ": " << failure;
    std::cout << std::endl;
    failures += !failure.empty();
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
